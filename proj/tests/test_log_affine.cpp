#include "branchline/log_affine.hpp"

#include "branchline/errors.hpp"
#include "branchline/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

namespace branchline {
namespace {

Rational random_rational(std::mt19937& rng, bool positive) {
    std::uniform_int_distribution<int> num(positive ? 1 : -99, 99);
    std::uniform_int_distribution<int> den(1, 99);
    int p = num(rng);
    if (positive && p <= 0) p = 1 - p;
    return Rational(p, den(rng));
}

LogAffineDiffeo random_element(std::mt19937& rng) {
    return make_log_affine(random_rational(rng, false), random_rational(rng, true));
}

TEST(LogAffine, ConstructionValidatesThePositiveExponent) {
    EXPECT_NO_THROW(make_log_affine(Rational(-7, 3), Rational(5, 2)));
    EXPECT_THROW(make_log_affine(0, 0), InputError);
    EXPECT_THROW(make_log_affine(0, Rational(-1, 2)), InputError);
}

TEST(LogAffine, ComposeIsTheAffineActionOnLogCoordinates) {
    // (alpha, s) o (beta, t) = (alpha + s*beta, s*t), exactly.
    const LogAffineDiffeo f = make_log_affine(Rational(7, 3), 3);
    const LogAffineDiffeo g = make_log_affine(Rational(-2, 5), 2);
    const LogAffineDiffeo fg = compose(f, g);
    EXPECT_EQ(fg.alpha, Rational(7, 3) + 3 * Rational(-2, 5));
    EXPECT_EQ(fg.s, 6);
}

TEST(LogAffine, PowerCompositionSquaresToTheFourthPower) {
    const LogAffineDiffeo square = make_log_affine(0, 2);
    const LogAffineDiffeo fourth = compose(square, square);
    EXPECT_EQ(fourth, make_log_affine(0, 4));
}

// (2 x^3) o (5 x^2) = 250 x^6: checked through double evaluation, with the
// scale factors e^alpha pinned by rational approximations of log 2 and log 5.
TEST(LogAffine, ScaleFormCompositionMatchesTheClassicalFormula) {
    const Rational log2("6931471805599453/10000000000000000");
    const Rational log5("16094379124341003/10000000000000000");
    const LogAffineDiffeo f = make_log_affine(log2, 3);   // ~ 2 x^3
    const LogAffineDiffeo g = make_log_affine(log5, 2);   // ~ 5 x^2
    const LogAffineDiffeo fg = compose(f, g);
    EXPECT_EQ(fg.s, 6);
    // e^(alpha_f + 3*alpha_g) = 2 * 5^3 = 250 (up to the approximation of the logs).
    EXPECT_NEAR(std::exp(rational_to_double(fg.alpha)), 250.0, 250.0 * 1e-9);
    for (double x : {0.5, 1.0, 2.0}) {
        EXPECT_NEAR(evaluate(fg, x), evaluate(f, evaluate(g, x)), 1e-9 * evaluate(fg, x));
    }
}

TEST(LogAffine, InverseIsExactAndTwoSided) {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        const LogAffineDiffeo f = random_element(rng);
        EXPECT_EQ(compose(f, inverse(f)), log_affine_identity());
        EXPECT_EQ(compose(inverse(f), f), log_affine_identity());
    }
}

TEST(LogAffine, GroupLawHoldsExactlyOnRandomizedTriples) {
    std::mt19937 rng(424242);
    const LogAffineDiffeo e = log_affine_identity();
    for (int i = 0; i < 500; ++i) {
        const LogAffineDiffeo f = random_element(rng);
        const LogAffineDiffeo g = random_element(rng);
        const LogAffineDiffeo h = random_element(rng);
        ASSERT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
        ASSERT_EQ(compose(f, e), f);
        ASSERT_EQ(compose(e, f), f);
    }
}

TEST(LogAffine, EvaluateMatchesTheClosedForm) {
    const LogAffineDiffeo f = make_log_affine(1, Rational(1, 2));
    EXPECT_NEAR(evaluate(f, 4.0), std::exp(1.0) * 2.0, 1e-12);
    const LogAffineDiffeo g = make_log_affine(0, 3);
    EXPECT_DOUBLE_EQ(evaluate(g, 2.0), 8.0);
}

TEST(ExtendsToLine, ExactlyTheLinearMaps) {
    EXPECT_TRUE(extends_to_line(log_affine_identity()));
    EXPECT_TRUE(extends_to_line(make_log_affine(Rational(17, 5), 1)));
    EXPECT_FALSE(extends_to_line(make_log_affine(0, 2)));   // derivative 0 at 0+
    EXPECT_FALSE(extends_to_line(make_log_affine(0, Rational(1, 3))));  // derivative inf
}

TEST(SameDoubleCoset, DistinctExponentsAreInNoCommonCoset) {
    const DoubleCosetVerdict verdict =
        same_double_coset(make_log_affine(0, 2), make_log_affine(0, 3));
    EXPECT_FALSE(verdict.same_plain);
    EXPECT_FALSE(verdict.same_pm);
    EXPECT_FALSE(verdict.witness.has_value());
}

TEST(SameDoubleCoset, ReciprocalExponentsOnlyMeetInThePlusMinusCoset) {
    const DoubleCosetVerdict verdict =
        same_double_coset(make_log_affine(0, 2), make_log_affine(0, Rational(1, 2)));
    EXPECT_FALSE(verdict.same_plain);
    EXPECT_TRUE(verdict.same_pm);
}

TEST(SameDoubleCoset, EqualExponentsComeWithAReplayableWitness) {
    // 5 x^2 versus 1 x^2 (the scale 5 carried as a formal log-coordinate).
    const Rational log5(8, 5);  // any nonzero stand-in works; the algebra is formal
    const LogAffineDiffeo f = make_log_affine(log5, 2);
    const LogAffineDiffeo g = make_log_affine(0, 2);
    const DoubleCosetVerdict verdict = same_double_coset(f, g);
    EXPECT_TRUE(verdict.same_plain);
    EXPECT_TRUE(verdict.same_pm);
    ASSERT_TRUE(verdict.witness.has_value());
    const auto& [a_hat, b_hat] = *verdict.witness;
    // Witnesses live in the extendable subgroup and replay exactly.
    EXPECT_TRUE(extends_to_line(a_hat));
    EXPECT_TRUE(extends_to_line(b_hat));
    EXPECT_EQ(compose(b_hat, compose(f, inverse(a_hat))), g);
}

TEST(SameDoubleCoset, WitnessReplaysOnRandomizedEqualExponentPairs) {
    std::mt19937 rng(77);
    for (int i = 0; i < 200; ++i) {
        const Rational s = random_rational(rng, true);
        const LogAffineDiffeo f = make_log_affine(random_rational(rng, false), s);
        const LogAffineDiffeo g = make_log_affine(random_rational(rng, false), s);
        const DoubleCosetVerdict verdict = same_double_coset(f, g);
        ASSERT_TRUE(verdict.same_plain);
        ASSERT_TRUE(verdict.witness.has_value());
        const auto& [a_hat, b_hat] = *verdict.witness;
        ASSERT_EQ(compose(b_hat, compose(f, inverse(a_hat))), g);
    }
}

TEST(SameDoubleCoset, PlainAlwaysImpliesPlusMinus) {
    std::mt19937 rng(1312);
    for (int i = 0; i < 300; ++i) {
        const LogAffineDiffeo f = random_element(rng);
        const LogAffineDiffeo g = random_element(rng);
        const DoubleCosetVerdict verdict = same_double_coset(f, g);
        if (verdict.same_plain) EXPECT_TRUE(verdict.same_pm);
        if (!verdict.same_pm) EXPECT_FALSE(verdict.same_plain);
    }
}

TEST(SameDoubleCoset, IsAnEquivalenceRelation) {
    std::mt19937 rng(99);
    // Draw exponents from a tiny pool so collisions actually happen.
    const std::vector<Rational> pool = {1, 2, Rational(1, 2), Rational(3, 4)};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<LogAffineDiffeo> sample;
    for (int i = 0; i < 60; ++i) {
        sample.push_back(make_log_affine(random_rational(rng, false), pool[pick(rng)]));
    }
    for (const auto& f : sample) {
        EXPECT_TRUE(same_double_coset(f, f).same_plain);  // reflexive
        for (const auto& g : sample) {
            const auto fg = same_double_coset(f, g);
            const auto gf = same_double_coset(g, f);
            EXPECT_EQ(fg.same_plain, gf.same_plain);  // symmetric
            EXPECT_EQ(fg.same_pm, gf.same_pm);
            for (const auto& h : sample) {  // transitive
                const auto gh = same_double_coset(g, h);
                const auto fh = same_double_coset(f, h);
                if (fg.same_plain && gh.same_plain) EXPECT_TRUE(fh.same_plain);
                if (fg.same_pm && gh.same_pm) EXPECT_TRUE(fh.same_pm);
            }
        }
    }
}

TEST(SameDoubleCoset, UnitExponentCharacterizesTheCanonicalCoset) {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        const LogAffineDiffeo f = random_element(rng);
        const bool canonical = same_double_coset(f, log_affine_identity()).same_plain;
        EXPECT_EQ(canonical, f.s == 1);
        EXPECT_EQ(canonical, extends_to_line(f));
    }
}

TEST(Rationals, ParseAndFormatRoundTrip) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("+2/6"), Rational(1, 3));  // canonicalized
    EXPECT_EQ(format_rational(Rational(5)), "5");
    EXPECT_EQ(format_rational(Rational(-3, 9)), "-1/3");
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("abc"), InputError);
    EXPECT_THROW(parse_rational("1.5"), InputError);
}

} // namespace
} // namespace branchline
