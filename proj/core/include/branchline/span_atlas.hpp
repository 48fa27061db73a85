/// @file span_atlas.hpp
/// @brief C-spans inside an ambient category, atlases made of arrow-category
///        charts, their isomorphism classification (plain and copy-
///        exchanging), and the brute-force check that classes of atlases
///        correspond exactly to double cosets of their transitions.
#pragma once

#include "branchline/category.hpp"
#include "branchline/cosets.hpp"
#include "branchline/perm_group.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace branchline {

/// A span U <- W -> V with both legs in the subcategory C; objects and legs
/// are indices into the ambient category.
struct CSpan {
    std::size_t object_u = 0;
    std::size_t object_w = 0;
    std::size_t object_v = 0;
    std::size_t leg_u = 0;  ///< morphism W -> U
    std::size_t leg_v = 0;  ///< morphism W -> V
};

/// Builds a span from the two leg morphism ids, deriving the objects from
/// their endpoints. @throws InputError when a leg is missing from C, the
/// legs' sources differ, or an object is outside C.
CSpan make_cspan(const SubcategoryPair& pair, const std::string& leg_u_id,
                 const std::string& leg_v_id);

/// The one-object span with identity legs (the group-as-span model).
CSpan group_span(const SubcategoryPair& pair);

/// A chart over a span leg: a commuting square (outer, hat) of H-isomorphisms
/// with outer o leg = leg o hat — an automorphism of the leg in the arrow
/// category. `outer` acts on the leg's target, `hat` on W.
struct ArrowChart {
    std::size_t outer = 0;
    std::size_t hat = 0;
    auto operator<=>(const ArrowChart&) const = default;
};

/// Two charts plus the cached transition hat_v o hat_u^-1 : W -> W.
struct HCAtlas {
    ArrowChart chart_u;
    ArrowChart chart_v;
    std::size_t transition = 0;
    auto operator<=>(const HCAtlas&) const = default;
};

/// All automorphisms of `f` in the arrow category: pairs (p, q) of
/// H-isomorphisms with q o f = f o p (p on the source side, q on the target
/// side), ordered by (p, q) index.
std::vector<std::pair<std::size_t, std::size_t>> arrow_automorphisms(const FiniteCategory& h,
                                                                     std::size_t f);

/// All atlases in the strict sense: chart pairs over the span's legs whose
/// transition lies in C. Ordered by (chart_u, chart_v).
/// @throws InputError when the span does not lie in C.
std::vector<HCAtlas> enumerate_hc_atlases(const SubcategoryPair& pair, const CSpan& span);

enum class ClassifyMode { Plain, PlusMinus };

std::string to_string(ClassifyMode mode);

/// The classification universe together with its partition into isomorphism
/// classes. Classes hold ascending indices into `universe` and are ordered
/// by least member, so each class's first atlas is its lexicographically
/// least representative.
struct AtlasClassification {
    std::vector<HCAtlas> universe;
    std::vector<std::vector<std::size_t>> classes;
};

/// Decides whether a span isomorphism carries atlas `a` to atlas `b`: an
/// H-isomorphism triple (phi_U, phi_W, phi_V) commuting with the legs whose
/// four chart-coordinate representations are C-isomorphisms. PlusMinus also
/// accepts copy-exchanging triples (phi_U : U -> V, phi_V : V -> U)
/// commuting with the legs crosswise.
bool are_atlases_isomorphic(const SubcategoryPair& pair, const CSpan& span, const HCAtlas& a,
                            const HCAtlas& b, ClassifyMode mode);

/// Partitions the full chart-pair universe over the span (transitions range
/// over all H-isomorphisms of W, so the induced map onto double cosets of
/// transitions can be surjective) by exhaustive isomorphism search. In
/// PlusMinus mode a C-isomorphism U -> V must exist: `eta_id`, when given,
/// names one and is validated (InputError if it is not a C-isomorphism
/// U -> V); otherwise one is searched for automatically and NoEtaError is
/// thrown when none exists. The partition itself does not depend on the
/// choice.
AtlasClassification classify_hc_atlases(const SubcategoryPair& pair, const CSpan& span,
                                        ClassifyMode mode,
                                        const std::optional<std::string>& eta_id = std::nullopt);

/// Outcome of replaying the double-coset characterization on a group: the
/// coset partitions computed by group arithmetic and the transition sets of
/// the atlas classes, which must coincide block-by-block.
struct SpanCosetReport {
    CosetPartition plain_cosets;
    CosetPartition pm_cosets;
    std::vector<std::vector<Perm>> plain_classes;  ///< transitions per atlas class
    std::vector<std::vector<Perm>> pm_classes;
    bool plain_matches = false;
    bool pm_matches = false;
    bool matches() const { return plain_matches && pm_matches; }
};

/// Builds the group-as-span model for (G, C), classifies atlases in both
/// modes, and compares the classes' transition sets against the double-coset
/// and pm-double-coset partitions. @throws InputError when sub is not a
/// subgroup of group.
SpanCosetReport verify_double_coset_characterization(const PermGroup& group,
                                                     const Subgroup& sub);

} // namespace branchline
