/// @file catalog.hpp
/// @brief Named constructions of small permutation groups, including one
///        representative of every isomorphism type of order at most 12.
#pragma once

#include "branchline/perm_group.hpp"

#include <string>
#include <vector>

namespace branchline {

/// Symmetric group S_n on {0,...,n-1}.
PermGroup symmetric_group(std::size_t n);

/// Cyclic group C_n generated by one n-cycle (C_1 is the trivial group).
PermGroup cyclic_group(std::size_t n);

/// Dihedral group of order 2n acting on an n-gon (n >= 3).
PermGroup dihedral_group(std::size_t n);

/// Alternating group A_4 on 4 points.
PermGroup alternating_group_4();

/// Quaternion group Q_8 in its regular representation on 8 points
/// (point labels follow 1, i, -1, -i, j, k, -j, -k).
PermGroup quaternion_group_8();

/// Dicyclic group of order 12 in its regular representation
/// (presentation a^6 = e, b^2 = a^3, b a b^-1 = a^-1).
PermGroup dicyclic_group_12();

/// Direct product acting on the disjoint union of the factors' points.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// A named group from the catalog below.
struct CatalogEntry {
    std::string name;
    PermGroup group;
};

/// One representative per isomorphism type of order <= 12 (24 entries),
/// ordered by (order, name). Distinctness of the types is certified by the
/// element-order signature tests that accompany this catalog.
std::vector<CatalogEntry> groups_of_order_at_most_12();

} // namespace branchline
