#include "branchline/perm_group.hpp"

#include "branchline/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace branchline {

namespace {

constexpr std::size_t kMaxOrder = 20000;

std::vector<Perm> close_under_products(std::size_t degree, const std::vector<Perm>& generators) {
    std::set<Perm> elements;
    std::queue<Perm> frontier;
    const Perm id = Perm::identity(degree);
    elements.insert(id);
    frontier.push(id);

    // Generators plus inverses guarantee full group closure from products.
    std::vector<Perm> step = generators;
    for (const Perm& g : generators) step.push_back(g.inverse());

    while (!frontier.empty()) {
        const Perm current = frontier.front();
        frontier.pop();
        for (const Perm& g : step) {
            Perm next = compose(current, g);
            if (elements.insert(next).second) {
                if (elements.size() > kMaxOrder) {
                    throw InputError("group closure exceeds supported order");
                }
                frontier.push(std::move(next));
            }
        }
    }
    return {elements.begin(), elements.end()}; // std::set iterates in canonical order
}

} // namespace

PermGroup closure(std::size_t degree, const std::vector<Perm>& generators) {
    for (const Perm& g : generators) {
        if (g.degree() != degree) {
            throw InputError("generator degree mismatch in closure");
        }
    }
    PermGroup group;
    group.degree = degree;
    group.generators = generators;
    group.elements = close_under_products(degree, generators);
    return group;
}

PermGroup closure(const std::vector<Perm>& generators) {
    if (generators.empty()) {
        throw InputError("cannot infer degree from an empty generator list");
    }
    return closure(generators.front().degree(), generators);
}

bool contains(const PermGroup& group, const Perm& p) {
    return std::binary_search(group.elements.begin(), group.elements.end(), p);
}

bool contains(const Subgroup& subgroup, const Perm& p) {
    return std::binary_search(subgroup.elements.begin(), subgroup.elements.end(), p);
}

std::optional<std::size_t> element_index(const PermGroup& group, const Perm& p) {
    const auto it = std::lower_bound(group.elements.begin(), group.elements.end(), p);
    if (it == group.elements.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - group.elements.begin());
}

Subgroup subgroup_from_generators(const PermGroup& parent, const std::vector<Perm>& gens) {
    for (const Perm& g : gens) {
        if (!contains(parent, g)) {
            throw InputError("subgroup generator lies outside the parent group");
        }
    }
    Subgroup sub;
    sub.degree = parent.degree;
    sub.elements = close_under_products(parent.degree, gens);
    return sub;
}

Subgroup subgroup_whole(const PermGroup& parent) {
    return Subgroup{parent.degree, parent.elements};
}

Subgroup subgroup_trivial(const PermGroup& parent) {
    return Subgroup{parent.degree, {Perm::identity(parent.degree)}};
}

bool is_subgroup_of(const PermGroup& group, const Subgroup& candidate) {
    if (candidate.degree != group.degree) return false;
    return std::all_of(candidate.elements.begin(), candidate.elements.end(),
                       [&](const Perm& p) { return contains(group, p); });
}

std::vector<Subgroup> enumerate_subgroups(const PermGroup& group) {
    std::set<std::vector<Perm>> seen;
    std::queue<std::vector<Perm>> frontier;

    const Subgroup trivial = subgroup_trivial(group);
    seen.insert(trivial.elements);
    frontier.push(trivial.elements);

    while (!frontier.empty()) {
        const std::vector<Perm> current = frontier.front();
        frontier.pop();
        for (const Perm& g : group.elements) {
            if (std::binary_search(current.begin(), current.end(), g)) continue;
            std::vector<Perm> gens = current;
            gens.push_back(g);
            std::vector<Perm> extended = close_under_products(group.degree, gens);
            if (seen.insert(extended).second) {
                frontier.push(std::move(extended));
            }
        }
    }

    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& elems : seen) {
        out.push_back(Subgroup{group.degree, elems});
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

GroupIndexTables build_index_tables(const PermGroup& group) {
    GroupIndexTables tables;
    tables.order = group.order();
    if (tables.order > 60000) throw InputError("group too large for index tables");
    tables.mul.resize(tables.order * tables.order);
    tables.inv.resize(tables.order);

    for (std::size_t i = 0; i < tables.order; ++i) {
        const Perm& a = group.elements[i];
        if (a.is_identity()) tables.identity = static_cast<std::uint16_t>(i);
        tables.inv[i] = static_cast<std::uint16_t>(*element_index(group, a.inverse()));
        for (std::size_t j = 0; j < tables.order; ++j) {
            const Perm product = compose(a, group.elements[j]);
            tables.mul[i * tables.order + j] =
                static_cast<std::uint16_t>(*element_index(group, product));
        }
    }
    return tables;
}

} // namespace branchline
