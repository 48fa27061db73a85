/// @file hadamard.hpp
/// @brief The ratio probe r(x) = b(x'^s)/x^t with x' = a^-1(x): a numeric
///        detector for whether two power-type germs can be conjugate.
///
/// If b o g_s o a^-1 equaled g_t near 0 for admissible a, b (increasing,
/// fixing 0, with positive finite derivative there), the ratio would have a
/// bounded positive limit at 0; r(x) behaves like x^(s-t) times a continuous
/// positive factor, so s > t forces the ratio to vanish and s < t forces it
/// to diverge — which is exactly what the probe reports.
#pragma once

#include "branchline/numeric_diffeo.hpp"
#include "branchline/rational.hpp"

#include <vector>

namespace branchline {

enum class ProbeVerdict { BoundedPositiveLimit, Vanishes, Diverges, Inconclusive };

const char* to_string(ProbeVerdict verdict);

struct ProbeReport {
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;
    std::vector<double> grid;    ///< as supplied, decreasing toward 0
    std::vector<double> ratios;  ///< r(x) per grid point
    double slope = 0;            ///< log-log slope over the small-x half
    double ratio_min = 0;
    double ratio_max = 0;
    double decades = 0;           ///< total grid span, log10(x_max/x_min)
    double monotone_decades = 0;  ///< longest strictly monotone ratio run
};

/// Evaluate r(x) = b(g_s(a^-1(x))) / x^t on a decreasing positive grid and
/// classify the trend. Verdict thresholds and minimum-grid rules live in
/// tolerances.hpp; an under-specified grid yields Inconclusive, never a
/// silently chosen verdict.
/// @throws InputError if the grid is not strictly decreasing and positive,
///         if a or b fails the monotone/round-trip checks on the grid's
///         range, if either map does not fix 0, or if ratios are non-finite.
ProbeReport hadamard_ratio_probe(const Rational& s, const Rational& t,
                                 const NumericDiffeo& a, const NumericDiffeo& b,
                                 const std::vector<double>& grid);

/// The default probe grid: `points` geometric samples from hi down to lo.
std::vector<double> default_probe_grid();
std::vector<double> probe_grid(double lo, double hi, std::size_t points);

} // namespace branchline
