// Microbenchmarks for the hot paths: group closure, coset partitions, the
// exhaustive wreath-axiom sweep, atlas classification, exact log-affine
// arithmetic, the ratio probe, and gluing.

#include <benchmark/benchmark.h>

#include "branchline/catalog.hpp"
#include "branchline/cosets.hpp"
#include "branchline/glue.hpp"
#include "branchline/hadamard.hpp"
#include "branchline/log_affine.hpp"
#include "branchline/manifold.hpp"
#include "branchline/numeric_diffeo.hpp"
#include "branchline/perm_group.hpp"
#include "branchline/span_atlas.hpp"
#include "branchline/wreath.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace bl = branchline;

namespace {

void BM_ClosureS4(benchmark::State& state) {
    const bl::PermGroup s4 = bl::symmetric_group(4);
    for (auto _ : state) {
        bl::PermGroup group = bl::closure(4, s4.generators);
        benchmark::DoNotOptimize(group.elements.data());
    }
}
BENCHMARK(BM_ClosureS4);

void BM_EnumerateSubgroupsS4(benchmark::State& state) {
    const bl::PermGroup s4 = bl::symmetric_group(4);
    for (auto _ : state) {
        std::vector<bl::Subgroup> subgroups = bl::enumerate_subgroups(s4);
        benchmark::DoNotOptimize(subgroups.data());
    }
}
BENCHMARK(BM_EnumerateSubgroupsS4);

void BM_PmDoubleCosetsS4(benchmark::State& state) {
    const bl::PermGroup s4 = bl::symmetric_group(4);
    const bl::Subgroup s3_in_s4 = bl::subgroup_from_generators(
        s4, {bl::Perm::from_cycles(4, {{0, 1}}), bl::Perm::from_cycles(4, {{0, 1, 2}})});
    for (auto _ : state) {
        bl::CosetPartition partition = bl::pm_double_cosets(s4, s3_in_s4);
        benchmark::DoNotOptimize(partition.blocks.data());
    }
}
BENCHMARK(BM_PmDoubleCosetsS4);

void BM_WreathMultiply(benchmark::State& state) {
    const bl::PermGroup s3 = bl::symmetric_group(3);
    const std::vector<bl::WreathElement> elements = bl::wreath_elements(bl::subgroup_whole(s3));
    std::size_t i = 0;
    for (auto _ : state) {
        const bl::WreathElement& x = elements[i % elements.size()];
        const bl::WreathElement& y = elements[(i * 7 + 3) % elements.size()];
        bl::WreathElement product = bl::wreath_multiply(x, y);
        benchmark::DoNotOptimize(product.delta);
        ++i;
    }
}
BENCHMARK(BM_WreathMultiply);

void BM_VerifyActionAxiomsS3Whole(benchmark::State& state) {
    const bl::PermGroup s3 = bl::symmetric_group(3);
    const bl::ActionContext ctx{s3, bl::subgroup_whole(s3), std::nullopt};
    for (auto _ : state) {
        bl::WreathAxiomReport report = bl::verify_action_axioms(ctx);
        benchmark::DoNotOptimize(report.checks);
    }
}
BENCHMARK(BM_VerifyActionAxiomsS3Whole);

void BM_VerifyActionAxiomsS4D4(benchmark::State& state) {
    const bl::PermGroup s4 = bl::symmetric_group(4);
    const bl::Subgroup d4 = bl::subgroup_from_generators(
        s4, {bl::Perm::from_cycles(4, {{0, 1, 2, 3}}), bl::Perm::from_cycles(4, {{0, 2}})});
    const bl::ActionContext ctx{s4, d4, std::nullopt};
    for (auto _ : state) {
        bl::WreathAxiomReport report = bl::verify_action_axioms(ctx);
        benchmark::DoNotOptimize(report.checks);
    }
}
BENCHMARK(BM_VerifyActionAxiomsS4D4);

void BM_VerifyDoubleCosetCharacterizationS3(benchmark::State& state) {
    const bl::PermGroup s3 = bl::symmetric_group(3);
    const bl::Subgroup swap = bl::subgroup_from_generators(s3, {bl::Perm::from_cycles(3, {{0, 1}})});
    for (auto _ : state) {
        bl::SpanCosetReport report = bl::verify_double_coset_characterization(s3, swap);
        benchmark::DoNotOptimize(report.plain_matches);
    }
}
BENCHMARK(BM_VerifyDoubleCosetCharacterizationS3);

void BM_LogAffineComposeInverse(benchmark::State& state) {
    const bl::LogAffineDiffeo f = bl::make_log_affine(bl::Rational(7) / 3, bl::Rational(5) / 2);
    const bl::LogAffineDiffeo g = bl::make_log_affine(bl::Rational(-2) / 9, bl::Rational(4) / 7);
    for (auto _ : state) {
        bl::LogAffineDiffeo out = bl::compose(bl::inverse(f), bl::compose(g, f));
        benchmark::DoNotOptimize(&out);
    }
}
BENCHMARK(BM_LogAffineComposeInverse);

void BM_SameDoubleCoset(benchmark::State& state) {
    const bl::LogAffineDiffeo f = bl::make_log_affine(bl::Rational(7) / 3, bl::Rational(5) / 2);
    const bl::LogAffineDiffeo g = bl::make_log_affine(bl::Rational(1) / 4, bl::Rational(5) / 2);
    for (auto _ : state) {
        bl::DoubleCosetVerdict verdict = bl::same_double_coset(f, g);
        benchmark::DoNotOptimize(verdict.same_plain);
    }
}
BENCHMARK(BM_SameDoubleCoset);

void BM_ClassifyAndBuildDiffeo(benchmark::State& state) {
    const bl::MinimalAtlas a = bl::minimal_atlas_from_transition(
        bl::ManifoldKind::Y, bl::make_log_affine(bl::Rational(1) / 3, 2));
    const bl::MinimalAtlas b = bl::minimal_atlas_from_transition(
        bl::ManifoldKind::Y, bl::make_log_affine(bl::Rational(-1) / 5, 2));
    for (auto _ : state) {
        const bl::ClassificationVerdict verdict = bl::classify_pair(a, b);
        const bl::GluedMap map = bl::build_diffeomorphism(a, b, *verdict.witness);
        benchmark::DoNotOptimize(map(bl::GluedPoint{0, 1.5}).x);
    }
}
BENCHMARK(BM_ClassifyAndBuildDiffeo);

void BM_HadamardProbe(benchmark::State& state) {
    const bl::Interval domain{0.0, 10.0};
    const bl::NumericDiffeo a = bl::nd_quarter_quadratic(domain);
    const bl::NumericDiffeo b = bl::nd_rational_blend(domain);
    const std::vector<double> grid = bl::default_probe_grid();
    for (auto _ : state) {
        bl::ProbeReport report = bl::hadamard_ratio_probe(2, 1, a, b, grid);
        benchmark::DoNotOptimize(report.slope);
    }
}
BENCHMARK(BM_HadamardProbe);

void BM_GlueBump(benchmark::State& state) {
    const bl::GluingExample example = bl::gluing_example("bump");
    for (auto _ : state) {
        bl::NumericDiffeo glued = bl::glue_to_canonical(example.g, example.b, example.hat_h_u,
                                                        example.hat_h_v, 1000);
        benchmark::DoNotOptimize(glued.forward(1.5));
    }
}
BENCHMARK(BM_GlueBump);

} // namespace

BENCHMARK_MAIN();
