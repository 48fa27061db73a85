// branchline — command-line front end.
//
// Subcommands: cosets, verify-wreath, classify-y, classify-l,
// verify-corollary, probe-hadamard, glue. Reports go to standard output as
// JSON; --verbose adds a human summary on standard error. Exit codes:
// 0 success, 1 verification failure (a counterexample or mismatch was
// found), 2 malformed input (nothing is written to standard output).

#include "CLI11.hpp"

#include "branchline/cosets.hpp"
#include "branchline/errors.hpp"
#include "branchline/glue.hpp"
#include "branchline/hadamard.hpp"
#include "branchline/json_io.hpp"
#include "branchline/log_affine.hpp"
#include "branchline/manifold.hpp"
#include "branchline/numeric_diffeo.hpp"
#include "branchline/perm_group.hpp"
#include "branchline/span_atlas.hpp"
#include "branchline/tolerances.hpp"
#include "branchline/wreath.hpp"

#include <cctype>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace bl = branchline;
using bl::Json;

namespace {

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw bl::InputError("malformed JSON for " + what + ": " + e.what());
    }
}

/// Option values may be inline JSON (sniffed by a leading '{' or '[') or a
/// path to a JSON file.
Json load_json_arg(const std::string& arg, const std::string& what) {
    for (char c : arg) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{' || c == '[') return parse_json_text(arg, what);
        break;
    }
    std::ifstream in(arg);
    if (!in) throw bl::InputError("cannot read " + what + " file: '" + arg + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), what);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

bl::NumericDiffeo named_probe_map(const std::string& name) {
    const bl::Interval domain{0.0, 10.0};
    if (name == "identity") return bl::nd_identity(domain);
    if (name == "linear2") return bl::nd_linear(2.0, domain);
    if (name == "quad") return bl::nd_quarter_quadratic(domain);
    if (name == "blend") return bl::nd_rational_blend(domain);
    throw bl::InputError("unknown map '" + name +
                         "' (expected identity, linear2, quad, or blend)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations on wreath-product double cosets, log-affine "
                 "diffeomorphism families, glued one-manifolds, and span atlases"};
    app.require_subcommand(1);
    app.fallthrough();

    bool verbose = false;
    long long seed = 0;
    long long samples = 0;
    app.add_flag("--verbose", verbose, "Human-readable summary on standard error");
    app.add_option("--seed", seed, "Seed for randomized sweeps");
    app.add_option("--samples", samples, "Sample count for numeric grids (0 = default)");

    int exit_code = 0;

    // --- cosets -----------------------------------------------------------
    auto* cosets = app.add_subcommand(
        "cosets", "Partition a group into double cosets (or +- double cosets) of a subgroup");
    std::string cosets_group, cosets_subgroup;
    bool cosets_pm = false;
    cosets->add_option("--group", cosets_group, "Group JSON (inline or file)")->required();
    cosets->add_option("--subgroup", cosets_subgroup, "Subgroup JSON (inline or file)")
        ->required();
    cosets->add_flag("--pm", cosets_pm, "Use W g W united with W g^-1 W blocks");
    cosets->callback([&]() {
        const bl::PermGroup group = bl::group_from_json(load_json_arg(cosets_group, "--group"));
        const bl::Subgroup sub =
            bl::subgroup_from_json(group, load_json_arg(cosets_subgroup, "--subgroup"));
        const bl::CosetPartition partition =
            cosets_pm ? bl::pm_double_cosets(group, sub) : bl::double_cosets(group, sub, sub);
        if (verbose) {
            std::cerr << "group order " << group.order() << ", subgroup order " << sub.order()
                      << ", " << partition.blocks.size() << " blocks\n";
        }
        emit(bl::partition_to_json(partition.blocks));
    });

    // --- verify-wreath ------------------------------------------------------
    auto* wreath = app.add_subcommand(
        "verify-wreath", "Exhaustively check the wreath action axioms over (G, W, eta)");
    std::string wreath_group, wreath_subgroup, wreath_eta;
    bool corrupt_multiply = false;
    wreath->add_option("--group", wreath_group, "Group JSON (inline or file)")->required();
    wreath->add_option("--subgroup", wreath_subgroup, "Subgroup JSON (inline or file)")
        ->required();
    wreath->add_option("--eta", wreath_eta,
                       "Twisting element (image sequence or cycle list JSON)");
    wreath->add_flag("--corrupt-multiply", corrupt_multiply,
                     "Swap one composition order in the group law (negative testing)");
    wreath->callback([&]() {
        const bl::PermGroup group = bl::group_from_json(load_json_arg(wreath_group, "--group"));
        const bl::Subgroup sub =
            bl::subgroup_from_json(group, load_json_arg(wreath_subgroup, "--subgroup"));
        bl::ActionContext ctx{group, sub, std::nullopt};
        if (!wreath_eta.empty()) {
            ctx.eta = bl::perm_from_json(load_json_arg(wreath_eta, "--eta"), group.degree);
        }
        bl::WreathAxiomReport report;
        if (corrupt_multiply) {
            const bl::WreathMultiplyFn corrupted = bl::corrupted_wreath_multiply;
            report = bl::verify_action_axioms(ctx, &corrupted);
        } else {
            report = bl::verify_action_axioms(ctx);
        }
        if (verbose) {
            std::cerr << report.checks << " checks, " << report.total_counterexamples()
                      << " counterexamples\n";
            for (const std::string& sample : report.sample_counterexamples) {
                std::cerr << "  " << sample << "\n";
            }
        }
        emit(bl::wreath_report_to_json(report));
        if (!report.passed()) exit_code = 1;
    });

    // --- classify-y / classify-l -------------------------------------------
    std::string classify_a, classify_b;
    const auto add_classify = [&](const std::string& name, const std::string& blurb) {
        auto* cmd = app.add_subcommand(name, blurb);
        cmd->add_option("--a", classify_a, "First transition {\"alpha\",\"s\"}")->required();
        cmd->add_option("--b", classify_b, "Second transition {\"alpha\",\"s\"}")->required();
        return cmd;
    };
    const auto run_classify = [&](bl::ManifoldKind kind) {
        const bl::MinimalAtlas atlas_a = bl::minimal_atlas_from_transition(
            kind, bl::log_affine_from_json(load_json_arg(classify_a, "--a")));
        const bl::MinimalAtlas atlas_b = bl::minimal_atlas_from_transition(
            kind, bl::log_affine_from_json(load_json_arg(classify_b, "--b")));
        const bl::ClassificationVerdict verdict = bl::classify_pair(atlas_a, atlas_b);
        if (verbose) {
            std::cerr << to_string(kind) << " atlases: " << to_string(verdict.verdict) << "\n";
        }
        emit(bl::classification_to_json(verdict));
    };
    add_classify("classify-y",
                 "Classify two atlases of the branched line Y up to diffeomorphism")
        ->callback([&]() { run_classify(bl::ManifoldKind::Y); });
    add_classify("classify-l",
                 "Classify two atlases of the two-origin line L up to diffeomorphism")
        ->callback([&]() { run_classify(bl::ManifoldKind::L); });

    // --- verify-corollary ---------------------------------------------------
    auto* corollary = app.add_subcommand(
        "verify-corollary",
        "Check that atlas-isomorphism classes match double cosets of transitions");
    std::string cor_group, cor_subgroup, cor_mode;
    corollary->add_option("--group", cor_group, "Group JSON (inline or file)")->required();
    corollary->add_option("--subgroup", cor_subgroup, "Subgroup JSON (inline or file)")
        ->required();
    corollary->add_option("--mode", cor_mode, "Restrict to one mode: plain or pm");
    corollary->callback([&]() {
        if (!cor_mode.empty() && cor_mode != "plain" && cor_mode != "pm") {
            throw bl::InputError("unknown mode: '" + cor_mode + "' (expected plain or pm)");
        }
        const bl::PermGroup group = bl::group_from_json(load_json_arg(cor_group, "--group"));
        const bl::Subgroup sub =
            bl::subgroup_from_json(group, load_json_arg(cor_subgroup, "--subgroup"));
        const bl::SpanCosetReport report = bl::verify_double_coset_characterization(group, sub);
        const Json full = bl::span_report_to_json(report);
        bool ok = false;
        Json out;
        if (cor_mode.empty()) {
            out = full;
            ok = report.matches();
        } else {
            out = Json::object();
            out[cor_mode] = full.at(cor_mode);
            ok = cor_mode == "plain" ? report.plain_matches : report.pm_matches;
        }
        if (verbose) {
            std::cerr << "plain: " << (report.plain_matches ? "match" : "MISMATCH")
                      << ", pm: " << (report.pm_matches ? "match" : "MISMATCH") << "\n";
        }
        emit(out);
        if (!ok) exit_code = 1;
    });

    // --- probe-hadamard -----------------------------------------------------
    auto* probe = app.add_subcommand(
        "probe-hadamard", "Classify the small-x trend of b(x^s after a^-1) / x^t");
    std::string probe_s, probe_t, probe_a = "identity", probe_b = "identity";
    probe->add_option("--s", probe_s, "Exponent s as p/q")->required();
    probe->add_option("--t", probe_t, "Exponent t as p/q")->required();
    probe->add_option("--a", probe_a, "Inner map: identity, linear2, quad, or blend");
    probe->add_option("--b", probe_b, "Outer map: identity, linear2, quad, or blend");
    probe->callback([&]() {
        const bl::Rational s = bl::parse_rational(probe_s);
        const bl::Rational t = bl::parse_rational(probe_t);
        const std::size_t points =
            samples > 0 ? static_cast<std::size_t>(samples) : bl::tol::kProbeDefaultPoints;
        const auto grid =
            bl::probe_grid(bl::tol::kProbeDefaultLo, bl::tol::kProbeDefaultHi, points);
        const bl::ProbeReport report = bl::hadamard_ratio_probe(
            s, t, named_probe_map(probe_a), named_probe_map(probe_b), grid);
        if (verbose) {
            std::cerr << to_string(report.verdict) << " over " << report.decades
                      << " decades (slope " << report.slope << ")\n";
        }
        emit(bl::probe_report_to_json(report));
    });

    // --- glue ----------------------------------------------------------------
    auto* glue = app.add_subcommand(
        "glue", "Glue a chart map against a transition and report the seam residuals");
    std::string glue_fixture;
    glue->add_option("--fixture", glue_fixture,
                     "identity, bump, bump-pair, violate-w-image, violate-fixed-ends, or "
                     "violate-overlap-match")
        ->required();
    glue->callback([&]() {
        const bl::GluingExample example = bl::gluing_example(glue_fixture);
        const std::size_t n =
            samples > 0 ? static_cast<std::size_t>(samples) : bl::tol::kGlueSamples;
        Json out = Json::object();
        out["fixture"] = glue_fixture;
        try {
            const bl::NumericDiffeo glued =
                bl::glue_to_canonical(example.g, example.b, example.hat_h_u, example.hat_h_v, n);
            out["glued"] = true;
            out["relation_residual"] =
                bl::glue_relation_residual(example.g, example.b, glued, n);
            out["identity_residual"] = bl::glue_identity_residual(glued, example.g.domain, n);
            if (verbose) std::cerr << "glued '" << glue_fixture << "' cleanly\n";
        } catch (const bl::PreconditionError& e) {
            out["glued"] = false;
            out["reason"] = e.what();
            if (verbose) std::cerr << "rejected: " << e.what() << "\n";
            exit_code = 1;
        }
        emit(out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bl::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const bl::NoEtaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const bl::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
