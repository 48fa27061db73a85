#include "branchline/cosets.hpp"

#include "branchline/catalog.hpp"
#include "branchline/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

namespace branchline {
namespace {

std::vector<std::size_t> block_sizes(const CosetPartition& partition) {
    std::vector<std::size_t> sizes;
    for (const auto& block : partition.blocks) sizes.push_back(block.size());
    return sizes;
}

// Blocks must tile the group: disjoint, covering, internally sorted, listed
// by increasing least element.
void expect_partition_of(const PermGroup& g, const CosetPartition& partition) {
    std::set<Perm> seen;
    for (const auto& block : partition.blocks) {
        ASSERT_FALSE(block.empty());
        EXPECT_TRUE(std::is_sorted(block.begin(), block.end()));
        for (const Perm& p : block) {
            EXPECT_TRUE(contains(g, p));
            EXPECT_TRUE(seen.insert(p).second) << perm_to_string(p) << " appears twice";
        }
    }
    EXPECT_EQ(seen.size(), g.order());
    for (std::size_t i = 1; i < partition.blocks.size(); ++i) {
        EXPECT_LT(partition.blocks[i - 1].front(), partition.blocks[i].front());
    }
}

TEST(DoubleCosets, S3ModuloATranspositionSplitsTwoFour) {
    const PermGroup g = symmetric_group(3);
    const Subgroup w = subgroup_from_generators(g, {Perm::from_cycles(3, {{0, 1}})});
    const CosetPartition partition = double_cosets(g, w, w);
    expect_partition_of(g, partition);
    ASSERT_EQ(partition.blocks.size(), 2u);
    EXPECT_EQ(block_sizes(partition), (std::vector<std::size_t>{2, 4}));
    // The small block is W itself.
    EXPECT_EQ(partition.blocks[0][0], Perm::identity(3));
    EXPECT_EQ(partition.blocks[0][1], Perm::from_cycles(3, {{0, 1}}));
}

TEST(DoubleCosets, TrivialSubgroupGivesSingletons) {
    const PermGroup g = symmetric_group(3);
    const Subgroup w = subgroup_trivial(g);
    const CosetPartition partition = double_cosets(g, w, w);
    expect_partition_of(g, partition);
    EXPECT_EQ(partition.blocks.size(), 6u);
    for (const auto& block : partition.blocks) EXPECT_EQ(block.size(), 1u);
}

TEST(DoubleCosets, WholeGroupGivesOneBlock) {
    const PermGroup g = symmetric_group(3);
    const Subgroup w = subgroup_whole(g);
    const CosetPartition partition = double_cosets(g, w, w);
    ASSERT_EQ(partition.blocks.size(), 1u);
    EXPECT_EQ(partition.blocks[0].size(), 6u);
}

TEST(DoubleCosets, AsymmetricPairPartitionsTheGroupToo) {
    const PermGroup g = symmetric_group(3);
    const Subgroup a = subgroup_from_generators(g, {Perm::from_cycles(3, {{0, 1}})});
    const Subgroup b = subgroup_from_generators(g, {Perm::from_cycles(3, {{0, 1, 2}})});
    const CosetPartition partition = double_cosets(g, a, b);
    expect_partition_of(g, partition);
    // |AgB| is a multiple of max(|A|,|B|) and divides |A||B|; here A·g·B = S3.
    EXPECT_EQ(partition.blocks.size(), 1u);
}

TEST(DoubleCosets, RejectsForeignSubgroups) {
    const PermGroup s3 = symmetric_group(3);
    const PermGroup c6 = cyclic_group(6);
    const Subgroup alien = subgroup_whole(c6);
    EXPECT_THROW(double_cosets(s3, alien, alien), InputError);
    EXPECT_THROW(pm_double_cosets(s3, alien), InputError);
}

TEST(PMDoubleCosets, S3ModuloATranspositionStaysTwoBlocks) {
    const PermGroup g = symmetric_group(3);
    const Subgroup w = subgroup_from_generators(g, {Perm::from_cycles(3, {{0, 1}})});
    const CosetPartition partition = pm_double_cosets(g, w);
    expect_partition_of(g, partition);
    EXPECT_EQ(partition.kind, CosetKind::PMDoubleCoset);
    EXPECT_EQ(block_sizes(partition), (std::vector<std::size_t>{2, 4}));
}

TEST(PMDoubleCosets, TrivialSubgroupPairsElementsWithInverses) {
    const PermGroup c4 = cyclic_group(4);
    const Subgroup w = subgroup_trivial(c4);
    const CosetPartition partition = pm_double_cosets(c4, w);
    expect_partition_of(c4, partition);
    for (const auto& block : partition.blocks) {
        ASSERT_LE(block.size(), 2u);
        const std::set<Perm> as_set(block.begin(), block.end());
        for (const Perm& p : block) EXPECT_TRUE(as_set.count(p.inverse()));
    }
    // e and the involution c^2 are self-paired; c pairs with c^3.
    EXPECT_EQ(block_sizes(partition), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(PMDoubleCosets, C5TrivialSubgroupExample) {
    const PermGroup c5 = cyclic_group(5);
    const CosetPartition partition = pm_double_cosets(c5, subgroup_trivial(c5));
    expect_partition_of(c5, partition);
    ASSERT_EQ(partition.blocks.size(), 3u);
    EXPECT_EQ(partition.blocks[0].size(), 1u);  // {e}
    EXPECT_EQ(partition.blocks[1].size(), 2u);  // {c, c^4}
    EXPECT_EQ(partition.blocks[2].size(), 2u);  // {c^2, c^3}
}

// The defining identity: every pm block is the union of the plain double
// coset of g and of g^-1. Swept over the whole catalog plus S4.
TEST(PMDoubleCosets, BlocksAreUnionsOfMirroredPlainCosets) {
    std::vector<PermGroup> groups;
    for (const CatalogEntry& entry : groups_of_order_at_most_12()) groups.push_back(entry.group);
    groups.push_back(symmetric_group(4));

    for (const PermGroup& g : groups) {
        for (const Subgroup& w : enumerate_subgroups(g)) {
            const CosetPartition plain = double_cosets(g, w, w);
            const CosetPartition pm = pm_double_cosets(g, w);
            expect_partition_of(g, pm);
            for (const Perm& p : g.elements) {
                std::set<Perm> expected;
                const auto& fwd = plain.blocks[plain.block_of(p)];
                const auto& bwd = plain.blocks[plain.block_of(p.inverse())];
                expected.insert(fwd.begin(), fwd.end());
                expected.insert(bwd.begin(), bwd.end());
                const auto& block = pm.blocks[pm.block_of(p)];
                EXPECT_EQ(std::set<Perm>(block.begin(), block.end()), expected);
            }
        }
    }
}

TEST(CosetPartition, BlockOfReportsNposForStrangers) {
    const PermGroup g = symmetric_group(3);
    const CosetPartition partition = double_cosets(g, subgroup_trivial(g), subgroup_trivial(g));
    EXPECT_EQ(partition.block_of(Perm::identity(4)), CosetPartition::npos);
}

} // namespace
} // namespace branchline
