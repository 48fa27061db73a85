/// @file tolerances.hpp
/// @brief Every numeric tolerance and grid default used by the library, in
///        one place. Exact-rational operations use none of these.
#pragma once

#include <cstddef>

namespace branchline::tol {

/// Strict-monotonicity slack for sampled numeric diffeomorphisms.
inline constexpr double kMono = 1e-9;

/// inverse(forward(x)) round-trip slack on sampled grids.
inline constexpr double kRoundTrip = 1e-9;

/// Gluing-hypothesis checks and the reconstructed seam relation.
inline constexpr double kGlue = 1e-9;

/// The glued chart map must be the identity outside the overlap to this.
inline constexpr double kGlueIdentity = 1e-12;

/// Relative error for identified-point checks on built manifold maps.
inline constexpr double kPointMatch = 1e-9;

/// Sampling protocol for manifold well-definedness checks.
inline constexpr std::size_t kManifoldSamples = 1000;
inline constexpr double kManifoldSampleLo = 1e-6;
inline constexpr double kManifoldSampleHi = 1e6;

/// Hadamard probe: default geometric grid and verdict thresholds. The
/// verdict reads the log-log slope of the ratio over the small-x half of
/// the grid; |slope| <= kProbeFlat means bounded-positive-limit, slope
/// beyond +/- kProbeTrend means vanishing/divergence, anything between is
/// inconclusive, as is a grid spanning < kProbeMinDecades decades or
/// carrying < kProbeMinPoints points.
inline constexpr std::size_t kProbeDefaultPoints = 512;
inline constexpr double kProbeDefaultHi = 1e-1;
inline constexpr double kProbeDefaultLo = 1e-8;
inline constexpr double kProbeFlat = 0.05;
inline constexpr double kProbeTrend = 0.5;
inline constexpr double kProbeMinDecades = 3.0;
inline constexpr std::size_t kProbeMinPoints = 8;

/// Default sample count for gluing-hypothesis grids.
inline constexpr std::size_t kGlueSamples = 1000;

} // namespace branchline::tol
