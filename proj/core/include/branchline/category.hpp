/// @file category.hpp
/// @brief Finite categories with explicit composition tables, subcategory
///        pairs, the arrow category, and the group-as-category constructor
///        that turns a permutation group into a one-object category.
#pragma once

#include "branchline/perm_group.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace branchline {

/// A morphism record; endpoints are indices into the owning category's
/// object list.
struct Morphism {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
};

/// A finite category: objects, morphisms, and a total composition table on
/// composable pairs. Morphisms are addressed by index everywhere; ids are
/// for construction, display, and serialization.
struct FiniteCategory {
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    /// Row-major |morphisms| x |morphisms| table: entry [g * n + f] is the
    /// index of g after f, or -1 when target(f) != source(g).
    std::vector<std::int32_t> compose_table;
    /// Per object: index of its identity morphism.
    std::vector<std::size_t> identities;

    std::size_t object_count() const { return objects.size(); }
    std::size_t morphism_count() const { return morphisms.size(); }

    bool composable(std::size_t g, std::size_t f) const;
    /// g after f. @throws InputError when the pair is not composable.
    std::size_t compose(std::size_t g, std::size_t f) const;
    std::size_t identity_of(std::size_t object) const;
    bool is_identity(std::size_t m) const;

    /// Index lookup by name. @throws InputError when absent.
    std::size_t object_index(const std::string& name) const;
    std::size_t morphism_index(const std::string& id) const;

    /// The two-sided inverse of m when m is an isomorphism.
    std::optional<std::size_t> inverse_of(std::size_t m) const;
    bool is_isomorphism(std::size_t m) const { return inverse_of(m).has_value(); }
};

/// Checks the category axioms exhaustively: identities are two-sided neutral,
/// composability matches endpoint bookkeeping, composition respects
/// endpoints, and associativity holds on all composable triples.
/// @throws InputError naming the first violated axiom.
void validate_category(const FiniteCategory& cat);

/// Builds and validates a category from readable pieces. `morphism_defs`
/// rows are {id, source object, target object}; `identity_ids` gives the
/// identity morphism id per object (same order as `objects`); `compose_ids`
/// is consulted for every composable pair (g after f) and must return an
/// existing morphism id with matching endpoints.
FiniteCategory make_finite_category(
    const std::vector<std::string>& objects,
    const std::vector<std::array<std::string, 3>>& morphism_defs,
    const std::vector<std::string>& identity_ids,
    const std::function<std::string(const std::string&, const std::string&)>& compose_ids);

/// The one-object category of a permutation group: morphism i corresponds to
/// group.elements[i] (ids are the cycle strings), composition is the group
/// law, and every morphism is an isomorphism.
FiniteCategory group_as_category(const PermGroup& group);

/// The arrow category Arr(H): objects are H's morphisms, morphisms f -> g
/// are the commuting squares (p, q) with g o p = q o f, composed
/// componentwise.
FiniteCategory arrow_category(const FiniteCategory& h);

/// A category together with an embedded subcategory, both referencing the
/// ambient object/morphism indices.
struct SubcategoryPair {
    FiniteCategory h;
    std::vector<std::size_t> c_objects;    ///< ascending object indices
    std::vector<std::size_t> c_morphisms;  ///< ascending morphism indices

    bool object_in_c(std::size_t object) const;
    bool morphism_in_c(std::size_t m) const;
};

/// Validates that the named objects/morphisms form a subcategory: endpoints
/// and identities of C-objects belong to C and C is closed under
/// composition. @throws InputError otherwise.
SubcategoryPair make_subcategory_pair(FiniteCategory h,
                                      const std::vector<std::string>& c_object_names,
                                      const std::vector<std::string>& c_morphism_ids);

/// group_as_category(group) together with the subcategory generated by the
/// subgroup's elements. @throws InputError when sub is not a subgroup of
/// group.
SubcategoryPair make_group_subcategory_pair(const PermGroup& group, const Subgroup& sub);

/// True when m lies in C, is an H-isomorphism, and its inverse lies in C as
/// well (C need not be closed under inversion, so this is stronger than
/// membership).
bool is_c_isomorphism(const SubcategoryPair& pair, std::size_t m);

} // namespace branchline
