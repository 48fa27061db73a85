#include "branchline/manifold.hpp"

#include "branchline/errors.hpp"
#include "branchline/numeric_diffeo.hpp"
#include "branchline/tolerances.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace branchline {
namespace {

MinimalAtlas atlas(ManifoldKind kind, Rational alpha, Rational s) {
    return minimal_atlas_from_transition(kind, make_log_affine(alpha, s));
}

TEST(ManifoldKind, ParsingAndPrinting) {
    EXPECT_EQ(manifold_kind_from_string("Y"), ManifoldKind::Y);
    EXPECT_EQ(manifold_kind_from_string("y"), ManifoldKind::Y);
    EXPECT_EQ(manifold_kind_from_string("L"), ManifoldKind::L);
    EXPECT_EQ(to_string(ManifoldKind::L), "L");
    EXPECT_THROW(manifold_kind_from_string("Z"), InputError);
}

TEST(GluedPoints, EqualityFollowsTheGluingRelation) {
    // Y glues the two copies along x > 0.
    EXPECT_TRUE(points_equal(ManifoldKind::Y, {0, 2.0}, {1, 2.0}));
    EXPECT_FALSE(points_equal(ManifoldKind::Y, {0, -2.0}, {1, -2.0}));
    EXPECT_FALSE(points_equal(ManifoldKind::Y, {0, 0.0}, {1, 0.0}));
    EXPECT_TRUE(points_equal(ManifoldKind::Y, {1, -3.0}, {1, -3.0}));
    // L glues along x != 0.
    EXPECT_TRUE(points_equal(ManifoldKind::L, {0, -2.0}, {1, -2.0}));
    EXPECT_FALSE(points_equal(ManifoldKind::L, {0, 0.0}, {1, 0.0}));
    EXPECT_FALSE(points_equal(ManifoldKind::L, {0, 1.0}, {1, 2.0}));
}

TEST(GluedPoints, TheBranchPairIsExactlyTheNonSeparablePair) {
    for (ManifoldKind kind : {ManifoldKind::Y, ManifoldKind::L}) {
        EXPECT_FALSE(is_separable_pair(kind, {0, 0.0}, {1, 0.0}));
        EXPECT_FALSE(is_separable_pair(kind, {1, 0.0}, {0, 0.0}));
        EXPECT_TRUE(is_separable_pair(kind, {0, 0.0}, {1, 1.0}));
        EXPECT_TRUE(is_separable_pair(kind, {0, 5.0}, {0, 6.0}));
        // Asking about an identified pair is a contract violation.
        EXPECT_THROW(is_separable_pair(kind, {0, 3.0}, {1, 3.0}), InputError);
        EXPECT_THROW(is_separable_pair(kind, {0, 3.0}, {0, 3.0}), InputError);
    }
    // Y keeps the negative half-lines separate: (-1, copy 0) vs (-1, copy 1)
    // are distinct but separable points.
    EXPECT_TRUE(is_separable_pair(ManifoldKind::Y, {0, -1.0}, {1, -1.0}));
}

TEST(GluedPoints, NumericIdentificationUsesRelativeTolerance) {
    EXPECT_TRUE(points_identified_within(ManifoldKind::Y, {0, 1e6}, {1, 1e6 * (1 + 1e-10)},
                                         1e-9));
    EXPECT_FALSE(points_identified_within(ManifoldKind::Y, {0, 1e6}, {1, 1e6 * (1 + 1e-6)},
                                          1e-9));
    EXPECT_TRUE(points_identified_within(ManifoldKind::Y, {0, 2.0}, {0, 2.0}, 1e-9));
    // Different copies on the unglued part never identify.
    EXPECT_FALSE(points_identified_within(ManifoldKind::Y, {0, -2.0}, {1, -2.0}, 1e-9));
    EXPECT_TRUE(points_identified_within(ManifoldKind::L, {0, -2.0}, {1, -2.0}, 1e-9));
}

TEST(Charts, CanonicalChartCoversCopyZeroAndTheGluedPart) {
    const ManifoldKind kind = ManifoldKind::Y;
    EXPECT_DOUBLE_EQ(chart_u(kind, {0, -1.5}), -1.5);
    EXPECT_DOUBLE_EQ(chart_u(kind, {0, 2.5}), 2.5);
    EXPECT_DOUBLE_EQ(chart_u(kind, {1, 2.5}), 2.5);  // glued name of the same point
    EXPECT_THROW(chart_u(kind, {1, -2.5}), InputError);  // outside u's domain
    const GluedPoint back = chart_u_inverse(kind, -1.5);
    EXPECT_EQ(back.copy, 0);
    EXPECT_DOUBLE_EQ(back.x, -1.5);
}

TEST(Charts, SecondChartReadsThroughTheTransition) {
    const MinimalAtlas a = atlas(ManifoldKind::Y, 0, 2);  // g(x) = x^2 on the overlap
    EXPECT_DOUBLE_EQ(chart_v(a, {0, 3.0}), 9.0);   // glued part: v = g(u)
    EXPECT_DOUBLE_EQ(chart_v(a, {1, 3.0}), 9.0);
    EXPECT_DOUBLE_EQ(chart_v(a, {1, -2.0}), -2.0); // private part of copy 1
    EXPECT_THROW(chart_v(a, {0, -1.0}), InputError);
    const GluedPoint p = chart_v_inverse(a, 9.0);
    EXPECT_EQ(p.copy, 1);
    EXPECT_TRUE(points_equal(ManifoldKind::Y, p, {0, 3.0}));
}

TEST(Charts, LKindTransitionExtendsOddly) {
    const MinimalAtlas a = atlas(ManifoldKind::L, 0, 3);  // x^3, oddly extended
    EXPECT_DOUBLE_EQ(chart_v(a, {0, 2.0}), 8.0);
    EXPECT_DOUBLE_EQ(chart_v(a, {0, -2.0}), -8.0);  // sign(x) e^alpha |x|^s
    const GluedPoint p = chart_v_inverse(a, -8.0);
    EXPECT_EQ(p.copy, 1);
    EXPECT_TRUE(points_equal(ManifoldKind::L, p, {0, -2.0}));
}

TEST(MinimalAtlas, RejectsNonPositiveExponents) {
    EXPECT_THROW(minimal_atlas_from_transition(
                     ManifoldKind::Y, LogAffineDiffeo{Rational(0), Rational(-2)}),
                 InputError);
}

TEST(ClassifyPair, ReproducesTheVerdictTable) {
    const auto classify = [](Rational sa, Rational sb) {
        return classify_pair(atlas(ManifoldKind::Y, 0, sa), atlas(ManifoldKind::Y, 0, sb))
            .verdict;
    };
    EXPECT_EQ(classify(2, 3), DiffeoVerdict::NotDiffeomorphic);
    EXPECT_EQ(classify(2, Rational(1, 2)), DiffeoVerdict::ExchangeOnly);
    EXPECT_EQ(classify(2, 2), DiffeoVerdict::PreserveOnly);
    EXPECT_EQ(classify(1, 1), DiffeoVerdict::Both);
}

TEST(ClassifyPair, RejectsMixedKinds) {
    EXPECT_THROW(classify_pair(atlas(ManifoldKind::Y, 0, 2), atlas(ManifoldKind::L, 0, 2)),
                 InputError);
}

TEST(ClassifyPair, WitnessesSatisfyTheChartRelationExactly) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 20);
    std::uniform_int_distribution<int> mode(0, 2);
    for (int i = 0; i < 200; ++i) {
        const Rational alpha_a(num(rng), den(rng));
        const Rational alpha_b(num(rng), den(rng));
        Rational sa(std::abs(num(rng)) + 1, den(rng));
        Rational sb;
        switch (mode(rng)) {
            case 0: sb = sa; break;
            case 1: sb = 1 / sa; break;
            default: sb = sa + 1; break;
        }
        const MinimalAtlas A = atlas(ManifoldKind::Y, alpha_a, sa);
        const MinimalAtlas B = atlas(ManifoldKind::Y, alpha_b, sb);
        const ClassificationVerdict verdict = classify_pair(A, B);
        if (!verdict.witness) {
            EXPECT_EQ(verdict.verdict, DiffeoVerdict::NotDiffeomorphic);
            continue;
        }
        const ChartRepresentation& rep = *verdict.witness;
        EXPECT_TRUE(extends_to_line(rep.a));
        EXPECT_TRUE(extends_to_line(rep.b));
        const LogAffineDiffeo lhs = compose(rep.b, compose(A.transition, inverse(rep.a)));
        const LogAffineDiffeo rhs =
            rep.delta == +1 ? B.transition : inverse(B.transition);
        EXPECT_EQ(lhs, rhs);
        // The witness must actually build.
        EXPECT_NO_THROW(build_diffeomorphism(A, B, rep));
    }
}

TEST(ClassifyPair, BothVerdictAlsoAdmitsAnExchangeWitness) {
    const MinimalAtlas A = atlas(ManifoldKind::Y, Rational(1, 2), 1);
    const MinimalAtlas B = atlas(ManifoldKind::Y, Rational(-1, 3), 1);
    const ClassificationVerdict verdict = classify_pair(A, B);
    EXPECT_EQ(verdict.verdict, DiffeoVerdict::Both);
    ASSERT_TRUE(verdict.witness.has_value());
    EXPECT_EQ(verdict.witness->delta, +1);  // the preserving witness is returned
    const auto exchange = exchange_witness(A, B);
    ASSERT_TRUE(exchange.has_value());
    EXPECT_EQ(exchange->delta, -1);
    EXPECT_EQ(compose(exchange->b, compose(A.transition, inverse(exchange->a))),
              inverse(B.transition));
    EXPECT_NO_THROW(build_diffeomorphism(A, B, *exchange));
}

TEST(ClassifyPair, ExchangeOnlyHasNoPreservingWitnessAndViceVersa) {
    const MinimalAtlas A = atlas(ManifoldKind::Y, 0, 2);
    const MinimalAtlas Brec = atlas(ManifoldKind::Y, 0, Rational(1, 2));
    const auto verdict = classify_pair(A, Brec);
    ASSERT_TRUE(verdict.witness.has_value());
    EXPECT_EQ(verdict.witness->delta, -1);

    const MinimalAtlas Bsame = atlas(ManifoldKind::Y, 1, 2);
    EXPECT_EQ(classify_pair(A, Bsame).witness->delta, +1);
    EXPECT_EQ(exchange_witness(A, Bsame), std::nullopt);
}

TEST(IsCanonicalClass, ExactlyTheUnitExponentAtlases) {
    EXPECT_TRUE(is_canonical_class(atlas(ManifoldKind::Y, 5, 1)));
    EXPECT_FALSE(is_canonical_class(atlas(ManifoldKind::Y, 0, 2)));
    EXPECT_TRUE(is_canonical_class(atlas(ManifoldKind::L, Rational(-7, 2), 1)));
}

// The doubling relation between chart maps: with g = x^2 on both sides, the
// pair (a, b) = (e^beta x, e^(2 beta) x) preserves the transition since
// b o g o a^-1 = g.
TEST(BuildDiffeomorphism, AcceptsTheDoubledScaleRepresentation) {
    const MinimalAtlas A = atlas(ManifoldKind::Y, 0, 2);
    const Rational beta(7, 5);
    const ChartRepresentation rep{make_log_affine(beta, 1), make_log_affine(2 * beta, 1), +1};
    EXPECT_NO_THROW(build_diffeomorphism(A, A, rep));
}

TEST(BuildDiffeomorphism, RoutesPointsThroughTheRightCharts) {
    const MinimalAtlas A = atlas(ManifoldKind::Y, 0, 2);
    const MinimalAtlas B = atlas(ManifoldKind::Y, 0, 2);
    const ChartRepresentation rep{log_affine_identity(), log_affine_identity(), +1};
    const GluedMap h = build_diffeomorphism(A, B, rep);
    const GluedPoint p0 = h({0, -1.5});
    EXPECT_EQ(p0.copy, 0);
    EXPECT_DOUBLE_EQ(p0.x, -1.5);
    const GluedPoint p1 = h({1, -4.0});
    EXPECT_EQ(p1.copy, 1);
    EXPECT_DOUBLE_EQ(p1.x, -4.0);
}

TEST(BuildDiffeomorphism, ExchangeWitnessSwapsTheCopies) {
    const MinimalAtlas A = atlas(ManifoldKind::Y, 0, 2);
    const MinimalAtlas B = atlas(ManifoldKind::Y, 0, Rational(1, 2));
    const auto verdict = classify_pair(A, B);
    ASSERT_TRUE(verdict.witness.has_value());
    const GluedMap h = build_diffeomorphism(A, B, *verdict.witness);
    EXPECT_EQ(h({0, -1.0}).copy, 1);
    EXPECT_EQ(h({1, -1.0}).copy, 0);
}

TEST(BuildDiffeomorphism, IdentifiedNamesLandOnIdentifiedPoints) {
    for (ManifoldKind kind : {ManifoldKind::Y, ManifoldKind::L}) {
        const MinimalAtlas A = atlas(kind, Rational(1, 3), 2);
        const MinimalAtlas B = atlas(kind, Rational(-2, 7), Rational(1, 2));
        const auto verdict = classify_pair(A, B);
        ASSERT_TRUE(verdict.witness.has_value());
        const GluedMap h = build_diffeomorphism(A, B, *verdict.witness);
        for (double x : geometric_grid(1e-6, 1e6, 200)) {
            const GluedPoint image0 = h({0, x});
            const GluedPoint image1 = h({1, x});
            EXPECT_TRUE(points_identified_within(kind, image0, image1, tol::kPointMatch))
                << to_string(kind) << " at x = " << x;
            if (kind == ManifoldKind::L) {
                EXPECT_TRUE(points_identified_within(kind, h({0, -x}), h({1, -x}),
                                                     tol::kPointMatch));
            }
        }
    }
}

TEST(BuildDiffeomorphism, RejectsBadRepresentations) {
    const MinimalAtlas A = atlas(ManifoldKind::Y, 0, 2);
    const MinimalAtlas L_atlas = atlas(ManifoldKind::L, 0, 2);
    const ChartRepresentation id_rep{log_affine_identity(), log_affine_identity(), +1};
    EXPECT_THROW(build_diffeomorphism(A, L_atlas, id_rep), InputError);  // kind mismatch

    // Chart maps must extend to the line.
    const ChartRepresentation squared{make_log_affine(0, 2), log_affine_identity(), +1};
    EXPECT_THROW(build_diffeomorphism(A, A, squared), InputError);

    // Wrong relation: names the residual rather than silently mis-gluing.
    const MinimalAtlas B = atlas(ManifoldKind::Y, 0, 3);
    try {
        build_diffeomorphism(A, B, id_rep);
        FAIL() << "expected PreconditionError";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("residual"), std::string::npos);
    }
}

} // namespace
} // namespace branchline
