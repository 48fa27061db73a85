#include "branchline/glue.hpp"

#include "branchline/errors.hpp"
#include "branchline/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace branchline {

namespace {

// std::to_string would render residuals below 5e-7 as "0.000000"; the
// tolerances here sit well under that, so use scientific notation.
std::string format_residual(double err) {
    std::ostringstream out;
    out << std::scientific << err;
    return out.str();
}

double require_close(double value, double target, double eps, const char* clause,
                     const char* what) {
    const double err = std::abs(value - target);
    if (!(err <= eps)) {
        throw PreconditionError(std::string("gluing hypothesis ") + clause + " fails: " + what +
                                " (residual " + format_residual(err) + ")");
    }
    return err;
}

/// C-infinity step: 0 for u <= 0, 1 for u >= 1, strictly rising in between.
double smooth_step(double u) {
    if (u <= 0) return 0;
    if (u >= 1) return 1;
    const double f = std::exp(-1.0 / u);
    const double g = std::exp(-1.0 / (1.0 - u));
    return f / (f + g);
}

/// C-infinity bump on [0,1]: exactly 0 on [0, 0.15] and [0.85, 1], exactly 1
/// on [0.4, 0.6]. Max slope is about 8, so amplitudes below 1/8 keep
/// x + amplitude * bump strictly increasing.
double plateau_bump(double u) {
    return smooth_step((u - 0.15) / 0.25) * smooth_step((0.85 - u) / 0.25);
}

NumericDiffeo bump_shift(Interval domain, double offset, double width, double amplitude) {
    auto forward = [offset, width, amplitude](double x) {
        return x + amplitude * plateau_bump((x - offset) / width);
    };
    return nd_from_forward(forward, domain, Smoothness{});
}

} // namespace

NumericDiffeo glue_to_canonical(const NumericDiffeo& g, const NumericDiffeo& b,
                                Interval hat_h_u, Interval hat_h_v, std::size_t samples) {
    if (samples == 0) samples = tol::kGlueSamples;
    const Interval w = g.domain;
    const Interval v = b.domain;

    if (!(w.lo < w.hi) || !(v.lo < v.hi)) throw InputError("degenerate interval");
    if (w.lo < v.lo - tol::kGlue || w.hi > v.hi + tol::kGlue) {
        throw InputError("the overlap W must be contained in V");
    }
    if (!(hat_h_u.lo < w.lo) || !(hat_h_u.hi > w.lo) || hat_h_u.hi > w.hi) {
        throw InputError("hat_h_u must cover U minus W and reach into W");
    }
    if (hat_h_v.lo < v.lo - tol::kGlue || hat_h_v.hi > v.hi + tol::kGlue ||
        !(hat_h_v.lo < hat_h_v.hi)) {
        throw InputError("hat_h_v must be a subinterval of V");
    }

    // Basic sanity of the supplied maps on their own intervals.
    check_diffeo_on_grid(g, uniform_grid(w.lo, w.hi, std::min<std::size_t>(samples, 256)),
                         "transition g");
    check_diffeo_on_grid(b, uniform_grid(v.lo, v.hi, std::min<std::size_t>(samples, 256)),
                         "chart map b");

    // (a) b maps W onto W: interior samples stay inside, endpoints are fixed.
    require_close(b.forward(w.lo), w.lo, tol::kGlue, "(a)", "b must fix the left end of W");
    require_close(b.forward(w.hi), w.hi, tol::kGlue, "(a)", "b must fix the right end of W");
    for (double x : uniform_grid(w.lo, w.hi, samples)) {
        const double y = b.forward(x);
        if (y < w.lo - tol::kGlue || y > w.hi + tol::kGlue) {
            throw PreconditionError(
                "gluing hypothesis (a) fails: b does not preserve the overlap W");
        }
    }

    // (b) b is the identity on hat_h_v.
    for (double x : uniform_grid(hat_h_v.lo, hat_h_v.hi, samples)) {
        require_close(b.forward(x), x, tol::kGlue, "(b)", "b must be the identity on hat_h_v");
    }

    // (c) b agrees with g on W intersect hat_h_v.
    const double c_lo = std::max(w.lo, hat_h_v.lo);
    const double c_hi = std::min(w.hi, hat_h_v.hi);
    if (c_lo < c_hi) {
        for (double x : uniform_grid(c_lo, c_hi, samples)) {
            require_close(b.forward(x), g.forward(x), tol::kGlue, "(c)",
                          "b must agree with g on W intersect hat_h_v");
        }
    }

    // a = g^-1 o b on W, identity elsewhere on U = hat_h_u union W.
    const Interval u_interval{std::min(hat_h_u.lo, w.lo), std::max(hat_h_u.hi, w.hi)};
    auto g_copy = g;
    auto b_copy = b;
    auto forward = [g_copy, b_copy, w](double x) {
        if (x <= w.lo) return x;
        return g_copy.inverse(std::clamp(b_copy.forward(x), w.lo, w.hi));
    };
    auto inverse = [g_copy, b_copy, w](double y) {
        if (y <= w.lo) return y;
        return b_copy.inverse(std::clamp(g_copy.forward(y), w.lo, w.hi));
    };
    NumericDiffeo a{forward, inverse, u_interval, combine(g.smoothness, b.smoothness)};

    // Replay the seam relation before handing the result out.
    const double residual = glue_relation_residual(g, b, a, samples);
    if (!(residual <= tol::kGlue)) {
        throw PreconditionError("glued map fails the seam relation replay (residual " +
                                std::to_string(residual) + ")");
    }
    return a;
}

double glue_relation_residual(const NumericDiffeo& g, const NumericDiffeo& b,
                              const NumericDiffeo& a, std::size_t samples) {
    const Interval w = g.domain;
    double worst = 0;
    for (double x : uniform_grid(w.lo, w.hi, samples)) {
        const double lhs = g.forward(x);
        const double rhs = b.forward(a.inverse(x));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double glue_identity_residual(const NumericDiffeo& a, Interval overlap_w,
                              std::size_t samples) {
    double worst = 0;
    const double lo = a.domain.lo;
    const double hi = overlap_w.lo; // U minus W is the part left of the overlap
    if (!(lo < hi)) return 0;
    for (double x : uniform_grid(lo, hi, samples)) {
        worst = std::max(worst, std::abs(a.forward(x) - x));
    }
    return worst;
}

GluingExample gluing_example(const std::string& name) {
    const Interval w{1.0, 2.0};
    const Interval v{1.0, 3.0};
    const Interval hat_h_u{0.0, 1.3};
    const Interval hat_h_v{1.9, 3.0};

    const NumericDiffeo bump_g = bump_shift(w, 1.0, 1.0, 0.05);
    const NumericDiffeo id_on_w = nd_identity(w);
    const NumericDiffeo id_on_v = nd_identity(v);

    if (name == "identity") {
        return GluingExample{id_on_w, id_on_v, hat_h_u, hat_h_v};
    }
    if (name == "bump") {
        return GluingExample{bump_g, id_on_v, hat_h_u, hat_h_v};
    }
    if (name == "bump-pair") {
        // b is its own bump, supported strictly inside (1, 1.9), so it fixes
        // W's ends, is the identity on hat_h_v, and matches g (= id) there.
        return GluingExample{bump_g, bump_shift(v, 1.0, 0.9, 0.03), hat_h_u, hat_h_v};
    }
    if (name == "violate-w-image") {
        auto shifted = nd_from_forward([](double x) { return x + 0.5; }, v, Smoothness{});
        return GluingExample{bump_g, shifted, hat_h_u, hat_h_v};
    }
    if (name == "violate-fixed-ends") {
        // A bump inside hat_h_v: preserves W but is not the identity there.
        return GluingExample{bump_g, bump_shift(v, 2.1, 0.5, 0.05), hat_h_u, hat_h_v};
    }
    if (name == "violate-overlap-match") {
        // Widening hat_h_v makes it reach the region where g is not the identity.
        return GluingExample{bump_g, id_on_v, hat_h_u, Interval{1.5, 3.0}};
    }
    throw InputError("unknown gluing example: '" + name + "'");
}

} // namespace branchline
