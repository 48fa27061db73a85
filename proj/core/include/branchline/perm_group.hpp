/// @file perm_group.hpp
/// @brief Finite permutation groups: closure from generators, subgroups,
///        canonical element order, and flat index tables for fast sweeps.
#pragma once

#include "branchline/perm.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace branchline {

/// A finite permutation group, given by generators and materialized as its
/// full element list. `elements` is closed under composition and inverse,
/// contains the identity, has no duplicates, and is sorted lexicographically
/// on image sequences (the canonical order used for all deterministic output).
struct PermGroup {
    std::size_t degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements;

    std::size_t order() const { return elements.size(); }
};

/// A subgroup, stored as its own closed, canonically ordered element list.
/// Factories validate closure/containment against a parent group; operations
/// taking (group, subgroup) pairs re-check containment and raise InputError.
struct Subgroup {
    std::size_t degree = 0;
    std::vector<Perm> elements;

    std::size_t order() const { return elements.size(); }
};

/// Breadth-first product closure of the generators (naive, fine for the
/// target scale of a few thousand elements).
/// @throws InputError if generators disagree on degree or exceed `degree`.
PermGroup closure(std::size_t degree, const std::vector<Perm>& generators);

/// Closure that infers the degree from a non-empty generator list.
PermGroup closure(const std::vector<Perm>& generators);

/// True iff `p` is a member of the group (binary search in canonical order).
bool contains(const PermGroup& group, const Perm& p);
bool contains(const Subgroup& subgroup, const Perm& p);

/// Index of `p` in the canonical element list, or nullopt.
std::optional<std::size_t> element_index(const PermGroup& group, const Perm& p);

/// Subgroup generated by `gens` inside `parent`.
/// @throws InputError if a generator lies outside the parent group.
Subgroup subgroup_from_generators(const PermGroup& parent, const std::vector<Perm>& gens);

/// The whole group / the trivial subgroup, as subgroups.
Subgroup subgroup_whole(const PermGroup& parent);
Subgroup subgroup_trivial(const PermGroup& parent);

/// True iff every element of `candidate` belongs to `group` (the candidate's
/// own closure invariant is maintained by the Subgroup factories).
bool is_subgroup_of(const PermGroup& group, const Subgroup& candidate);

/// Every subgroup of `group`, found by closing each extension of each known
/// subgroup by one extra element; deduplicated, sorted by (order, elements).
std::vector<Subgroup> enumerate_subgroups(const PermGroup& group);

/// Flat multiplication/inverse tables over the canonical element indices;
/// mul[i * order + j] is the index of elements[i] o elements[j].
struct GroupIndexTables {
    std::size_t order = 0;
    std::uint16_t identity = 0;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> inv;

    std::uint16_t multiply(std::uint16_t i, std::uint16_t j) const {
        return mul[static_cast<std::size_t>(i) * order + j];
    }
};

GroupIndexTables build_index_tables(const PermGroup& group);

} // namespace branchline
