/// @file numeric_diffeo.hpp
/// @brief Double-precision monotone maps with explicit inverses: the numeric
///        layer next to the exact log-affine family.
#pragma once

#include "branchline/log_affine.hpp"

#include <functional>
#include <vector>

namespace branchline {

/// An open interval (lo, hi); hi may be +infinity. Evaluation at the closure
/// endpoints is permitted whenever the wrapped callable is defined there.
struct Interval {
    double lo = 0;
    double hi = 0;

    bool contains(double x) const { return x > lo && x < hi; }
    bool contains_closed(double x) const { return x >= lo && x <= hi; }
    double span() const { return hi - lo; }
};

/// Smoothness metadata: a positive integer k, or infinity. No operation
/// branches on it; it only travels along with constructions.
struct Smoothness {
    static constexpr int kInfinite = -1;
    int k = kInfinite;

    bool is_infinite() const { return k == kInfinite; }
};

/// Combine smoothness of composed maps (the minimum, with infinity neutral).
Smoothness combine(Smoothness a, Smoothness b);

/// A strictly increasing evaluable map with an evaluable inverse on a stated
/// interval. `forward` and `inverse` must be pure. Monotonicity and the
/// round-trip law are checked on the sampled grids of whichever operation
/// consumes the map (tolerances tol::kMono / tol::kRoundTrip).
struct NumericDiffeo {
    std::function<double(double)> forward;
    std::function<double(double)> inverse;
    Interval domain;
    Smoothness smoothness;
};

/// The identity on `domain`.
NumericDiffeo nd_identity(Interval domain);

/// Wrap an exact log-affine map (and its exact inverse) on (0, hi).
NumericDiffeo nd_from_log_affine(const LogAffineDiffeo& f, Interval domain);

/// x -> c * x for c > 0.
NumericDiffeo nd_linear(double c, Interval domain);

/// x -> x + x^2/4 with the exact inverse y -> 2(sqrt(1+y) - 1); smooth,
/// increasing for x > -2, fixes 0, derivative 1 at 0.
NumericDiffeo nd_quarter_quadratic(Interval domain);

/// x -> x(1+x)/(1+2x) with the exact inverse y -> (2y-1+sqrt(4y^2+1))/2;
/// smooth on x > -1/2, fixes 0, derivative 1 at 0.
NumericDiffeo nd_rational_blend(Interval domain);

/// Wrap a strictly increasing forward map; the inverse is synthesized by
/// bisection on the domain (about 1 ulp of accuracy after 200 halvings).
/// The forward callable must be defined on the domain's closure.
NumericDiffeo nd_from_forward(std::function<double(double)> forward, Interval domain,
                              Smoothness smoothness);

/// Geometric grid of `points` samples from lo up to hi (inclusive ends,
/// strictly increasing); lo and hi must be positive.
std::vector<double> geometric_grid(double lo, double hi, std::size_t points);

/// Uniform grid on [lo, hi] (inclusive ends, strictly increasing).
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

/// @throws InputError unless f.forward is strictly increasing on the grid
/// (tolerance tol::kMono) and the round trip holds (tolerance tol::kRoundTrip).
void check_diffeo_on_grid(const NumericDiffeo& f, const std::vector<double>& grid,
                          const char* label);

} // namespace branchline
