/// @file manifold.hpp
/// @brief The branched line Y and the two-origin line L as glued point sets,
///        minimal atlases parameterized by a log-affine transition, the
///        four-way diffeomorphism classification of atlas pairs, and explicit
///        reconstruction of witness diffeomorphisms as evaluable point maps.
#pragma once

#include "branchline/log_affine.hpp"

#include <functional>
#include <optional>
#include <string>

namespace branchline {

/// Which gluing of two real lines is in play:
///   Y glues (x,0) ~ (x,1) for x > 0 (one branch point pair at the origin);
///   L glues (x,0) ~ (x,1) for x != 0 (the line with two origins).
enum class ManifoldKind { Y, L };

std::string to_string(ManifoldKind kind);

/// Parses "Y"/"y" or "L"/"l". @throws InputError otherwise.
ManifoldKind manifold_kind_from_string(const std::string& text);

/// A point of the glued space, named by a copy tag and a real coordinate.
/// Distinct (copy, x) pairs may name the same point; see points_equal.
struct GluedPoint {
    int copy = 0;  ///< 0 or 1
    double x = 0.0;
};

/// True when the gluing relation identifies p and q (or they are literally
/// the same pair). Exact on coordinates.
bool points_equal(ManifoldKind kind, const GluedPoint& p, const GluedPoint& q);

/// True when p and q admit disjoint neighborhoods. False exactly for the
/// branch pair {(0, copy 0), (0, copy 1)} (both kinds); decided from the
/// gluing relation analytically.
/// @throws InputError when points_equal(kind, p, q) already holds.
bool is_separable_pair(ManifoldKind kind, const GluedPoint& p, const GluedPoint& q);

/// Numeric companion of points_equal for replaying computed maps: same copy
/// and coordinates within `rel_tol` relative, or different copies with both
/// coordinates inside the glued region and within tolerance of each other.
bool points_identified_within(ManifoldKind kind, const GluedPoint& p, const GluedPoint& q,
                              double rel_tol);

/// An atlas of the glued space given by its transition map v o u^-1 on the
/// overlap. The first chart u is always the canonical coordinate on copy 0;
/// the second chart v equals the canonical coordinate on the non-glued part
/// of copy 1 and g composed with the canonical coordinate on the glued part.
/// For kind L the single transition acts on both components of the punctured
/// line as sign(x) * exp(alpha) * |x|^s.
struct MinimalAtlas {
    ManifoldKind kind = ManifoldKind::Y;
    LogAffineDiffeo transition;
};

/// @throws InputError when g is not orientation-preserving (s <= 0).
MinimalAtlas minimal_atlas_from_transition(ManifoldKind kind, const LogAffineDiffeo& g);

inline const LogAffineDiffeo& transition_of(const MinimalAtlas& atlas) {
    return atlas.transition;
}

/// A diffeomorphism between two atlases presented in chart coordinates:
/// the map acts as a on the u-chart and b on the v-chart, and delta = -1
/// means the two copies are exchanged. Both a and b must extend to the whole
/// line (s = 1), since the charts cover all of it.
struct ChartRepresentation {
    LogAffineDiffeo a;
    LogAffineDiffeo b;
    int delta = +1;
};

/// How two minimal atlases of the same kind compare.
enum class DiffeoVerdict {
    PreserveOnly,      ///< diffeomorphic keeping each copy, never exchanging
    ExchangeOnly,      ///< diffeomorphic only by exchanging the copies
    Both,              ///< diffeomorphic both ways (forces s_A = s_B = 1)
    NotDiffeomorphic,  ///< no diffeomorphism at all
};

std::string to_string(DiffeoVerdict verdict);

struct ClassificationVerdict {
    DiffeoVerdict verdict = DiffeoVerdict::NotDiffeomorphic;
    /// A witness passing build_diffeomorphism's precondition whenever the
    /// verdict admits one (the copy-preserving witness when both exist).
    std::optional<ChartRepresentation> witness;
};

/// Decides the verdict exactly from (s_A, s_B):
///   Both              iff s_A = s_B = 1,
///   PreserveOnly      iff s_B = s_A != 1,
///   ExchangeOnly      iff s_B = 1/s_A != s_A,
///   NotDiffeomorphic  otherwise,
/// and solves for a witness in exact log-coordinates when one exists.
/// @throws InputError when the kinds differ.
ClassificationVerdict classify_pair(const MinimalAtlas& A, const MinimalAtlas& B);

/// The copy-exchanging witness (delta = -1) when one exists, for callers that
/// want it even in the Both case (classify_pair returns the preserving one).
std::optional<ChartRepresentation> exchange_witness(const MinimalAtlas& A,
                                                    const MinimalAtlas& B);

/// True iff the atlas is diffeomorphic to the canonical one, i.e. iff its
/// transition extends to the whole line (s = 1).
bool is_canonical_class(const MinimalAtlas& A);

/// Chart evaluation helpers. u is the canonical coordinate on copy 0 plus the
/// glued part; v covers copy 1 plus the glued part, where it reads through
/// the transition.
/// @throws InputError when the point is outside the chart's domain.
double chart_u(ManifoldKind kind, const GluedPoint& p);
GluedPoint chart_u_inverse(ManifoldKind kind, double coordinate);
double chart_v(const MinimalAtlas& atlas, const GluedPoint& p);
GluedPoint chart_v_inverse(const MinimalAtlas& atlas, double coordinate);

using GluedMap = std::function<GluedPoint(const GluedPoint&)>;

/// Reconstructs the diffeomorphism named by `rep` as an evaluable point map:
/// h = u_B^-1 o a o u_A on copy 0 and h = v_B^-1 o b o v_A on copy 1, with
/// the target charts swapped when delta = -1. The evaluation routes by the
/// copy tag, so replaying both names of a glued point exercises both chart
/// formulas; the precondition makes the two results name the same point.
/// @throws InputError on kind mismatch or when a, b do not extend to the
///         line; PreconditionError (with the exact residual in (alpha, s)
///         coordinates) when the required relation g_B^(delta) = b o g_A o
///         a^-1 fails.
GluedMap build_diffeomorphism(const MinimalAtlas& A, const MinimalAtlas& B,
                              const ChartRepresentation& rep);

} // namespace branchline
