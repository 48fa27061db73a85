#include "branchline/numeric_diffeo.hpp"

#include "branchline/errors.hpp"
#include "branchline/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace branchline {

Smoothness combine(Smoothness a, Smoothness b) {
    if (a.is_infinite()) return b;
    if (b.is_infinite()) return a;
    return Smoothness{std::min(a.k, b.k)};
}

NumericDiffeo nd_identity(Interval domain) {
    return NumericDiffeo{[](double x) { return x; }, [](double y) { return y; }, domain,
                         Smoothness{}};
}

NumericDiffeo nd_from_log_affine(const LogAffineDiffeo& f, Interval domain) {
    const LogAffineDiffeo inv = inverse(f);
    return NumericDiffeo{[f](double x) { return evaluate(f, x); },
                         [inv](double y) { return evaluate(inv, y); }, domain,
                         Smoothness{}};
}

NumericDiffeo nd_linear(double c, Interval domain) {
    if (!(c > 0)) throw InputError("linear map needs a positive slope");
    return NumericDiffeo{[c](double x) { return c * x; }, [c](double y) { return y / c; },
                         domain, Smoothness{}};
}

NumericDiffeo nd_quarter_quadratic(Interval domain) {
    return NumericDiffeo{[](double x) { return x + x * x / 4.0; },
                         [](double y) { return 2.0 * (std::sqrt(1.0 + y) - 1.0); }, domain,
                         Smoothness{}};
}

NumericDiffeo nd_rational_blend(Interval domain) {
    return NumericDiffeo{
        [](double x) { return x * (1.0 + x) / (1.0 + 2.0 * x); },
        [](double y) { return (2.0 * y - 1.0 + std::sqrt(4.0 * y * y + 1.0)) / 2.0; },
        domain, Smoothness{}};
}

NumericDiffeo nd_from_forward(std::function<double(double)> forward, Interval domain,
                              Smoothness smoothness) {
    auto inverse = [forward, domain](double y) {
        double lo = domain.lo;
        double hi = domain.hi;
        if (!(forward(lo) - 1e-12 <= y && y <= forward(hi) + 1e-12)) {
            throw InputError("inverse query outside the map's range");
        }
        for (int i = 0; i < 200 && hi - lo > 0; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break; // double precision exhausted
            (forward(mid) < y ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    return NumericDiffeo{std::move(forward), std::move(inverse), domain, smoothness};
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0) || !(hi > lo) || points < 2) {
        throw InputError("geometric grid needs 0 < lo < hi and at least 2 points");
    }
    std::vector<double> grid(points);
    const double step = std::log(hi / lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo * std::exp(step * static_cast<double>(i));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
    if (!(hi > lo) || points < 2) {
        throw InputError("uniform grid needs lo < hi and at least 2 points");
    }
    std::vector<double> grid(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo + step * static_cast<double>(i);
    }
    grid.back() = hi;
    return grid;
}

void check_diffeo_on_grid(const NumericDiffeo& f, const std::vector<double>& grid,
                          const char* label) {
    double prev = 0;
    bool have_prev = false;
    for (double x : grid) {
        const double value = f.forward(x);
        if (!std::isfinite(value)) {
            throw InputError(std::string(label) + ": non-finite value at sampled point");
        }
        if (have_prev && !(value > prev - tol::kMono)) {
            throw InputError(std::string(label) + ": not strictly increasing on the sampled grid");
        }
        const double back = f.inverse(value);
        const double scale = std::max({1.0, std::abs(x), std::abs(value)});
        if (!(std::abs(back - x) <= tol::kRoundTrip * scale)) {
            throw InputError(std::string(label) + ": inverse round-trip fails on the sampled grid");
        }
        prev = value;
        have_prev = true;
    }
}

} // namespace branchline
