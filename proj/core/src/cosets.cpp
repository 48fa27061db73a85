#include "branchline/cosets.hpp"

#include "branchline/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace branchline {

namespace {

void require_subgroup(const PermGroup& G, const Subgroup& S, const char* label) {
    if (!is_subgroup_of(G, S)) {
        throw InputError(std::string(label) + " is not contained in the parent group");
    }
}

/// Collect {a o g o b} for all a in A, b in B into `dest`.
void accumulate_products(const Subgroup& A, const Perm& g, const Subgroup& B,
                         std::set<Perm>& dest) {
    for (const Perm& a : A.elements) {
        const Perm ag = compose(a, g);
        for (const Perm& b : B.elements) {
            dest.insert(compose(ag, b));
        }
    }
}

CosetPartition partition_by(const PermGroup& G, CosetKind kind,
                            const std::function<std::set<Perm>(const Perm&)>& block_of_rep) {
    CosetPartition partition;
    partition.kind = kind;
    std::set<Perm> assigned;
    // Scanning in canonical order makes each block's first-seen element its
    // least element, so blocks come out sorted by canonical representative.
    for (const Perm& g : G.elements) {
        if (assigned.contains(g)) continue;
        std::set<Perm> block = block_of_rep(g);
        partition.blocks.emplace_back(block.begin(), block.end());
        assigned.insert(block.begin(), block.end());
    }
    return partition;
}

} // namespace

std::size_t CosetPartition::block_of(const Perm& p) const {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (std::binary_search(blocks[i].begin(), blocks[i].end(), p)) return i;
    }
    return npos;
}

CosetPartition double_cosets(const PermGroup& G, const Subgroup& A, const Subgroup& B) {
    require_subgroup(G, A, "left subgroup");
    require_subgroup(G, B, "right subgroup");
    return partition_by(G, CosetKind::DoubleCoset, [&](const Perm& g) {
        std::set<Perm> block;
        accumulate_products(A, g, B, block);
        return block;
    });
}

CosetPartition pm_double_cosets(const PermGroup& G, const Subgroup& W) {
    require_subgroup(G, W, "subgroup");
    return partition_by(G, CosetKind::PMDoubleCoset, [&](const Perm& g) {
        std::set<Perm> block;
        accumulate_products(W, g, W, block);
        accumulate_products(W, g.inverse(), W, block);
        return block;
    });
}

} // namespace branchline
