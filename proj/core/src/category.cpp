#include "branchline/category.hpp"

#include "branchline/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace branchline {

namespace {

constexpr std::size_t kMaxArrowMorphisms = 2000;

void require_morphism_index(const FiniteCategory& cat, std::size_t m, const char* who) {
    if (m >= cat.morphism_count()) {
        throw InputError(std::string(who) + ": morphism index out of range");
    }
}

} // namespace

bool FiniteCategory::composable(std::size_t g, std::size_t f) const {
    require_morphism_index(*this, g, "composable");
    require_morphism_index(*this, f, "composable");
    return morphisms[f].target == morphisms[g].source;
}

std::size_t FiniteCategory::compose(std::size_t g, std::size_t f) const {
    require_morphism_index(*this, g, "compose");
    require_morphism_index(*this, f, "compose");
    const std::int32_t entry = compose_table[g * morphism_count() + f];
    if (entry < 0) {
        throw InputError("morphisms are not composable: '" + morphisms[g].id + "' after '" +
                         morphisms[f].id + "'");
    }
    return static_cast<std::size_t>(entry);
}

std::size_t FiniteCategory::identity_of(std::size_t object) const {
    if (object >= objects.size()) throw InputError("identity_of: object index out of range");
    return identities[object];
}

bool FiniteCategory::is_identity(std::size_t m) const {
    require_morphism_index(*this, m, "is_identity");
    return identities[morphisms[m].source] == m && morphisms[m].source == morphisms[m].target;
}

std::size_t FiniteCategory::object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (objects[i] == name) return i;
    }
    throw InputError("unknown object: '" + name + "'");
}

std::size_t FiniteCategory::morphism_index(const std::string& id) const {
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
        if (morphisms[i].id == id) return i;
    }
    throw InputError("unknown morphism: '" + id + "'");
}

std::optional<std::size_t> FiniteCategory::inverse_of(std::size_t m) const {
    require_morphism_index(*this, m, "inverse_of");
    const std::size_t src = morphisms[m].source;
    const std::size_t tgt = morphisms[m].target;
    for (std::size_t j = 0; j < morphism_count(); ++j) {
        if (morphisms[j].source != tgt || morphisms[j].target != src) continue;
        if (compose(m, j) == identities[tgt] && compose(j, m) == identities[src]) return j;
    }
    return std::nullopt;
}

void validate_category(const FiniteCategory& cat) {
    const std::size_t n = cat.morphism_count();
    if (cat.identities.size() != cat.object_count()) {
        throw InputError("category axioms: one identity per object is required");
    }
    if (cat.compose_table.size() != n * n) {
        throw InputError("category axioms: composition table has the wrong shape");
    }
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        const std::size_t e = cat.identities[i];
        if (e >= n || cat.morphisms[e].source != i || cat.morphisms[e].target != i) {
            throw InputError("category axioms: identity of '" + cat.objects[i] +
                             "' is not an endomorphism of it");
        }
    }
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t f = 0; f < n; ++f) {
            const std::int32_t entry = cat.compose_table[g * n + f];
            const bool should = cat.morphisms[f].target == cat.morphisms[g].source;
            if (should != (entry >= 0)) {
                throw InputError(
                    "category axioms: composition must be defined exactly on composable pairs");
            }
            if (entry < 0) continue;
            const Morphism& comp = cat.morphisms[static_cast<std::size_t>(entry)];
            if (comp.source != cat.morphisms[f].source || comp.target != cat.morphisms[g].target) {
                throw InputError("category axioms: composite endpoints are inconsistent");
            }
        }
    }
    for (std::size_t f = 0; f < n; ++f) {
        const std::size_t left = cat.identities[cat.morphisms[f].target];
        const std::size_t right = cat.identities[cat.morphisms[f].source];
        if (cat.compose(left, f) != f || cat.compose(f, right) != f) {
            throw InputError("category axioms: identities must be two-sided neutral");
        }
    }
    for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t g = 0; g < n; ++g) {
            if (!cat.composable(h, g)) continue;
            const std::size_t hg = cat.compose(h, g);
            for (std::size_t f = 0; f < n; ++f) {
                if (!cat.composable(g, f)) continue;
                if (cat.compose(hg, f) != cat.compose(h, cat.compose(g, f))) {
                    throw InputError("category axioms: composition is not associative");
                }
            }
        }
    }
}

FiniteCategory make_finite_category(
    const std::vector<std::string>& objects,
    const std::vector<std::array<std::string, 3>>& morphism_defs,
    const std::vector<std::string>& identity_ids,
    const std::function<std::string(const std::string&, const std::string&)>& compose_ids) {
    FiniteCategory cat;
    cat.objects = objects;
    std::map<std::string, std::size_t> object_of;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (!object_of.emplace(objects[i], i).second) {
            throw InputError("duplicate object name: '" + objects[i] + "'");
        }
    }
    std::map<std::string, std::size_t> morphism_of;
    for (const auto& def : morphism_defs) {
        const auto src = object_of.find(def[1]);
        const auto tgt = object_of.find(def[2]);
        if (src == object_of.end() || tgt == object_of.end()) {
            throw InputError("morphism '" + def[0] + "' references an unknown object");
        }
        if (!morphism_of.emplace(def[0], cat.morphisms.size()).second) {
            throw InputError("duplicate morphism id: '" + def[0] + "'");
        }
        cat.morphisms.push_back(Morphism{def[0], src->second, tgt->second});
    }
    if (identity_ids.size() != objects.size()) {
        throw InputError("one identity id per object is required");
    }
    for (const std::string& id : identity_ids) {
        const auto it = morphism_of.find(id);
        if (it == morphism_of.end()) throw InputError("unknown identity id: '" + id + "'");
        cat.identities.push_back(it->second);
    }
    const std::size_t n = cat.morphism_count();
    cat.compose_table.assign(n * n, -1);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t f = 0; f < n; ++f) {
            if (cat.morphisms[f].target != cat.morphisms[g].source) continue;
            const std::string result = compose_ids(cat.morphisms[g].id, cat.morphisms[f].id);
            const auto it = morphism_of.find(result);
            if (it == morphism_of.end()) {
                throw InputError("composition returned an unknown morphism id: '" + result + "'");
            }
            cat.compose_table[g * n + f] = static_cast<std::int32_t>(it->second);
        }
    }
    validate_category(cat);
    return cat;
}

FiniteCategory group_as_category(const PermGroup& group) {
    FiniteCategory cat;
    cat.objects = {"*"};
    const std::size_t n = group.order();
    cat.morphisms.reserve(n);
    for (const Perm& p : group.elements) {
        cat.morphisms.push_back(Morphism{perm_to_string(p), 0, 0});
    }
    const auto id_index = element_index(group, Perm::identity(group.degree));
    cat.identities = {id_index.value()};
    cat.compose_table.assign(n * n, -1);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t f = 0; f < n; ++f) {
            const Perm prod = compose(group.elements[g], group.elements[f]);
            cat.compose_table[g * n + f] =
                static_cast<std::int32_t>(element_index(group, prod).value());
        }
    }
    return cat;
}

FiniteCategory arrow_category(const FiniteCategory& h) {
    FiniteCategory arr;
    const std::size_t n = h.morphism_count();
    arr.objects.reserve(n);
    for (const Morphism& m : h.morphisms) arr.objects.push_back(m.id);

    // Morphisms f -> g are commuting squares (p, q) with g o p = q o f.
    std::map<std::array<std::size_t, 4>, std::size_t> square_index; // {f, g, p, q}
    for (std::size_t f = 0; f < n; ++f) {
        for (std::size_t g = 0; g < n; ++g) {
            for (std::size_t p = 0; p < n; ++p) {
                if (h.morphisms[p].source != h.morphisms[f].source ||
                    h.morphisms[p].target != h.morphisms[g].source) {
                    continue;
                }
                for (std::size_t q = 0; q < n; ++q) {
                    if (h.morphisms[q].source != h.morphisms[f].target ||
                        h.morphisms[q].target != h.morphisms[g].target) {
                        continue;
                    }
                    if (h.compose(g, p) != h.compose(q, f)) continue;
                    if (arr.morphisms.size() >= kMaxArrowMorphisms) {
                        throw InputError("arrow category exceeds the supported size");
                    }
                    square_index[{f, g, p, q}] = arr.morphisms.size();
                    arr.morphisms.push_back(Morphism{"sq" + std::to_string(p) + "_" +
                                                         std::to_string(q) + ":" +
                                                         std::to_string(f) + "->" +
                                                         std::to_string(g),
                                                     f, g});
                }
            }
        }
    }

    std::vector<std::array<std::size_t, 4>> keys(arr.morphisms.size());
    for (const auto& [key, idx] : square_index) keys[idx] = key;

    arr.identities.reserve(n);
    for (std::size_t f = 0; f < n; ++f) {
        const std::size_t p = h.identities[h.morphisms[f].source];
        const std::size_t q = h.identities[h.morphisms[f].target];
        arr.identities.push_back(square_index.at({f, f, p, q}));
    }

    const std::size_t m = arr.morphisms.size();
    arr.compose_table.assign(m * m, -1);
    for (std::size_t second = 0; second < m; ++second) {
        const auto& [g1, k, p2, q2] = keys[second];
        for (std::size_t first = 0; first < m; ++first) {
            const auto& [f, g2, p1, q1] = keys[first];
            if (g2 != g1) continue;
            const std::array<std::size_t, 4> key{f, k, h.compose(p2, p1), h.compose(q2, q1)};
            arr.compose_table[second * m + first] =
                static_cast<std::int32_t>(square_index.at(key));
        }
    }
    return arr;
}

bool SubcategoryPair::object_in_c(std::size_t object) const {
    return std::binary_search(c_objects.begin(), c_objects.end(), object);
}

bool SubcategoryPair::morphism_in_c(std::size_t m) const {
    return std::binary_search(c_morphisms.begin(), c_morphisms.end(), m);
}

SubcategoryPair make_subcategory_pair(FiniteCategory h,
                                      const std::vector<std::string>& c_object_names,
                                      const std::vector<std::string>& c_morphism_ids) {
    SubcategoryPair pair;
    for (const std::string& name : c_object_names) {
        pair.c_objects.push_back(h.object_index(name));
    }
    for (const std::string& id : c_morphism_ids) {
        pair.c_morphisms.push_back(h.morphism_index(id));
    }
    std::sort(pair.c_objects.begin(), pair.c_objects.end());
    pair.c_objects.erase(std::unique(pair.c_objects.begin(), pair.c_objects.end()),
                         pair.c_objects.end());
    std::sort(pair.c_morphisms.begin(), pair.c_morphisms.end());
    pair.c_morphisms.erase(std::unique(pair.c_morphisms.begin(), pair.c_morphisms.end()),
                           pair.c_morphisms.end());
    pair.h = std::move(h);

    for (std::size_t m : pair.c_morphisms) {
        if (!pair.object_in_c(pair.h.morphisms[m].source) ||
            !pair.object_in_c(pair.h.morphisms[m].target)) {
            throw InputError("subcategory morphism '" + pair.h.morphisms[m].id +
                             "' has an endpoint outside the subcategory");
        }
    }
    for (std::size_t obj : pair.c_objects) {
        if (!pair.morphism_in_c(pair.h.identities[obj])) {
            throw InputError("subcategory must contain the identity of '" +
                             pair.h.objects[obj] + "'");
        }
    }
    for (std::size_t g : pair.c_morphisms) {
        for (std::size_t f : pair.c_morphisms) {
            if (!pair.h.composable(g, f)) continue;
            if (!pair.morphism_in_c(pair.h.compose(g, f))) {
                throw InputError("subcategory is not closed under composition: '" +
                                 pair.h.morphisms[g].id + "' after '" + pair.h.morphisms[f].id +
                                 "'");
            }
        }
    }
    return pair;
}

SubcategoryPair make_group_subcategory_pair(const PermGroup& group, const Subgroup& sub) {
    if (!is_subgroup_of(group, sub)) {
        throw InputError("the subcategory generator must be a subgroup of the group");
    }
    SubcategoryPair pair;
    pair.h = group_as_category(group);
    pair.c_objects = {0};
    pair.c_morphisms.reserve(sub.order());
    for (const Perm& p : sub.elements) {
        pair.c_morphisms.push_back(element_index(group, p).value());
    }
    std::sort(pair.c_morphisms.begin(), pair.c_morphisms.end());
    return pair;
}

bool is_c_isomorphism(const SubcategoryPair& pair, std::size_t m) {
    if (!pair.morphism_in_c(m)) return false;
    const auto inv = pair.h.inverse_of(m);
    return inv.has_value() && pair.morphism_in_c(*inv);
}

} // namespace branchline
