#include "branchline/catalog.hpp"

#include "branchline/errors.hpp"

#include <algorithm>
#include <numeric>

namespace branchline {

namespace {

std::vector<std::size_t> iota_cycle(std::size_t n, std::size_t offset = 0) {
    std::vector<std::size_t> cycle(n);
    std::iota(cycle.begin(), cycle.end(), offset);
    return cycle;
}

} // namespace

PermGroup symmetric_group(std::size_t n) {
    if (n == 0) throw InputError("symmetric group degree must be positive");
    if (n == 1) return closure(1, {});
    std::vector<Perm> gens = {Perm::from_cycles(n, {{0, 1}}),
                              Perm::from_cycles(n, {iota_cycle(n)})};
    return closure(n, gens);
}

PermGroup cyclic_group(std::size_t n) {
    if (n == 0) throw InputError("cyclic group order must be positive");
    if (n == 1) return closure(1, {});
    return closure(n, {Perm::from_cycles(n, {iota_cycle(n)})});
}

PermGroup dihedral_group(std::size_t n) {
    if (n < 3) throw InputError("dihedral group needs an n-gon with n >= 3");
    const Perm rotation = Perm::from_cycles(n, {iota_cycle(n)});
    std::vector<std::uint8_t> reflect(n);
    for (std::size_t i = 0; i < n; ++i) {
        reflect[i] = static_cast<std::uint8_t>((n - i) % n);
    }
    return closure(n, {rotation, Perm{reflect}});
}

PermGroup alternating_group_4() {
    return closure(4, {Perm::from_cycles(4, {{0, 1, 2}}),
                       Perm::from_cycles(4, {{0, 1}, {2, 3}})});
}

PermGroup quaternion_group_8() {
    // Left multiplication by i and by j on {1, i, -1, -i, j, k, -j, -k}.
    const Perm mult_i = Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
    const Perm mult_j = Perm::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}});
    return closure(8, {mult_i, mult_j});
}

PermGroup dicyclic_group_12() {
    // Left multiplication on {a^k} u {a^k b}: points 0..5 are a^k, 6..11 are a^k b.
    const Perm mult_a = Perm::from_cycles(12, {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}});
    std::vector<std::uint8_t> mult_b_img = {6, 11, 10, 9, 8, 7, 3, 2, 1, 0, 5, 4};
    return closure(12, {mult_a, Perm{mult_b_img}});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    const std::size_t degree = a.degree + b.degree;
    std::vector<Perm> gens;
    for (const Perm& g : a.generators) {
        std::vector<std::uint8_t> img(degree);
        for (std::size_t i = 0; i < a.degree; ++i) img[i] = g(static_cast<std::uint8_t>(i));
        for (std::size_t i = a.degree; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
        gens.emplace_back(img);
    }
    for (const Perm& g : b.generators) {
        std::vector<std::uint8_t> img(degree);
        for (std::size_t i = 0; i < a.degree; ++i) img[i] = static_cast<std::uint8_t>(i);
        for (std::size_t i = 0; i < b.degree; ++i) {
            img[a.degree + i] =
                static_cast<std::uint8_t>(a.degree + g(static_cast<std::uint8_t>(i)));
        }
        gens.emplace_back(img);
    }
    return closure(degree, gens);
}

std::vector<CatalogEntry> groups_of_order_at_most_12() {
    std::vector<CatalogEntry> catalog;
    catalog.push_back({"C1", cyclic_group(1)});
    catalog.push_back({"C2", cyclic_group(2)});
    catalog.push_back({"C3", cyclic_group(3)});
    catalog.push_back({"C4", cyclic_group(4)});
    catalog.push_back({"C2xC2", direct_product(cyclic_group(2), cyclic_group(2))});
    catalog.push_back({"C5", cyclic_group(5)});
    catalog.push_back({"C6", cyclic_group(6)});
    catalog.push_back({"S3", symmetric_group(3)});
    catalog.push_back({"C7", cyclic_group(7)});
    catalog.push_back({"C8", cyclic_group(8)});
    catalog.push_back({"C4xC2", direct_product(cyclic_group(4), cyclic_group(2))});
    catalog.push_back({"C2xC2xC2",
                       direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                      cyclic_group(2))});
    catalog.push_back({"D4", dihedral_group(4)});
    catalog.push_back({"Q8", quaternion_group_8()});
    catalog.push_back({"C9", cyclic_group(9)});
    catalog.push_back({"C3xC3", direct_product(cyclic_group(3), cyclic_group(3))});
    catalog.push_back({"C10", cyclic_group(10)});
    catalog.push_back({"D5", dihedral_group(5)});
    catalog.push_back({"C11", cyclic_group(11)});
    catalog.push_back({"C12", cyclic_group(12)});
    catalog.push_back({"C6xC2", direct_product(cyclic_group(6), cyclic_group(2))});
    catalog.push_back({"D6", dihedral_group(6)});
    catalog.push_back({"A4", alternating_group_4()});
    catalog.push_back({"Dic3", dicyclic_group_12()});
    std::sort(catalog.begin(), catalog.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
        return a.name < b.name;
    });
    return catalog;
}

} // namespace branchline
