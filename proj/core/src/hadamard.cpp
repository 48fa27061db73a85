#include "branchline/hadamard.hpp"

#include "branchline/errors.hpp"
#include "branchline/tolerances.hpp"

#include <algorithm>
#include <cmath>

namespace branchline {

namespace {

void require_fixes_zero(const NumericDiffeo& f, const char* label) {
    const double at_zero = f.forward(0.0);
    if (!std::isfinite(at_zero) || std::abs(at_zero) > 1e-12) {
        throw InputError(std::string(label) + ": map must fix 0");
    }
}

/// Least-squares slope of log10(r) against log10(x).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& rs) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log10(xs[i]);
        const double ly = std::log10(rs[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0) return 0;
    return (n * sxy - sx * sy) / denom;
}

/// Longest strictly monotone run of ratios, measured in decades of x.
double longest_monotone_decades(const std::vector<double>& grid,
                                const std::vector<double>& ratios) {
    double best = 0;
    std::size_t run_start = 0;
    int direction = 0; // +1 rising, -1 falling along the decreasing-x grid
    for (std::size_t i = 1; i < grid.size(); ++i) {
        int step = 0;
        if (ratios[i] > ratios[i - 1]) step = +1;
        else if (ratios[i] < ratios[i - 1]) step = -1;
        if (step == 0 || (direction != 0 && step != direction)) {
            run_start = i - (step == 0 ? 0 : 1);
            direction = step;
        } else {
            direction = step;
        }
        if (direction != 0) {
            best = std::max(best, std::log10(grid[run_start] / grid[i]));
        }
    }
    return best;
}

} // namespace

const char* to_string(ProbeVerdict verdict) {
    switch (verdict) {
        case ProbeVerdict::BoundedPositiveLimit: return "BoundedPositiveLimit";
        case ProbeVerdict::Vanishes: return "Vanishes";
        case ProbeVerdict::Diverges: return "Diverges";
        case ProbeVerdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

ProbeReport hadamard_ratio_probe(const Rational& s, const Rational& t,
                                 const NumericDiffeo& a, const NumericDiffeo& b,
                                 const std::vector<double>& grid) {
    if (s <= 0 || t <= 0) throw InputError("probe exponents must be positive");
    if (grid.size() < 2) throw InputError("probe grid needs at least 2 points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0)) throw InputError("probe grid must be positive");
        if (i > 0 && !(grid[i] < grid[i - 1])) {
            throw InputError("probe grid must decrease strictly toward 0");
        }
    }

    require_fixes_zero(a, "probe map a");
    require_fixes_zero(b, "probe map b");

    // Validate a on the grid's own range and b on the range it will see.
    std::vector<double> ascending(grid.rbegin(), grid.rend());
    check_diffeo_on_grid(a, ascending, "probe map a");
    const double s_d = rational_to_double(s);
    std::vector<double> b_points;
    b_points.reserve(ascending.size());
    for (double x : ascending) b_points.push_back(std::pow(a.inverse(x), s_d));
    std::sort(b_points.begin(), b_points.end());
    check_diffeo_on_grid(b, b_points, "probe map b");

    ProbeReport report;
    report.grid = grid;
    report.ratios.reserve(grid.size());
    const double t_d = rational_to_double(t);
    for (double x : grid) {
        const double r = b.forward(std::pow(a.inverse(x), s_d)) / std::pow(x, t_d);
        if (!std::isfinite(r) || !(r > 0)) {
            throw InputError("probe ratio is non-finite or non-positive");
        }
        report.ratios.push_back(r);
    }

    report.ratio_min = *std::min_element(report.ratios.begin(), report.ratios.end());
    report.ratio_max = *std::max_element(report.ratios.begin(), report.ratios.end());
    report.decades = std::log10(grid.front() / grid.back());
    report.monotone_decades = longest_monotone_decades(grid, report.ratios);

    if (grid.size() < tol::kProbeMinPoints || report.decades < tol::kProbeMinDecades) {
        report.verdict = ProbeVerdict::Inconclusive;
        return report;
    }

    // Slope over the small-x half of the grid (log scale).
    const double mid = std::sqrt(grid.front() * grid.back());
    std::vector<double> tail_x, tail_r;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= mid) {
            tail_x.push_back(grid[i]);
            tail_r.push_back(report.ratios[i]);
        }
    }
    if (tail_x.size() < 2) {
        report.verdict = ProbeVerdict::Inconclusive;
        return report;
    }
    report.slope = loglog_slope(tail_x, tail_r);

    if (std::abs(report.slope) <= tol::kProbeFlat) {
        report.verdict = ProbeVerdict::BoundedPositiveLimit;
    } else if (report.slope >= tol::kProbeTrend) {
        report.verdict = ProbeVerdict::Vanishes;
    } else if (report.slope <= -tol::kProbeTrend) {
        report.verdict = ProbeVerdict::Diverges;
    } else {
        report.verdict = ProbeVerdict::Inconclusive;
    }
    return report;
}

std::vector<double> default_probe_grid() {
    return probe_grid(tol::kProbeDefaultLo, tol::kProbeDefaultHi, tol::kProbeDefaultPoints);
}

std::vector<double> probe_grid(double lo, double hi, std::size_t points) {
    std::vector<double> grid = geometric_grid(lo, hi, points);
    std::reverse(grid.begin(), grid.end());
    return grid;
}

} // namespace branchline
