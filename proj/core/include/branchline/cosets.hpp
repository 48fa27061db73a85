/// @file cosets.hpp
/// @brief Plain and ± double-coset partitions of a finite group.
#pragma once

#include "branchline/perm_group.hpp"

#include <vector>

namespace branchline {

enum class CosetKind { DoubleCoset, PMDoubleCoset };

/// A partition of the parent group's element set. Blocks are pairwise
/// disjoint, cover the group, are internally sorted in canonical order, and
/// are listed by increasing least element (the canonical representative).
struct CosetPartition {
    CosetKind kind = CosetKind::DoubleCoset;
    std::vector<std::vector<Perm>> blocks;

    /// Index of the block containing p, or npos when p is not in the group.
    std::size_t block_of(const Perm& p) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Partition of G into double cosets A·g·B = {a o g o b : a in A, b in B}.
/// @throws InputError if A or B is not contained in G.
CosetPartition double_cosets(const PermGroup& G, const Subgroup& A, const Subgroup& B);

/// Partition of G into ± double cosets W·g·W u W·g^-1·W (set union; the two
/// plain cosets either coincide or are disjoint, and the union is a block).
/// @throws InputError if W is not contained in G.
CosetPartition pm_double_cosets(const PermGroup& G, const Subgroup& W);

} // namespace branchline
