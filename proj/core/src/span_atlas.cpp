#include "branchline/span_atlas.hpp"

#include "branchline/errors.hpp"

#include <algorithm>
#include <set>

namespace branchline {

namespace {

/// Per-morphism inverse and C-isomorphism flags, precomputed once per search.
struct IsoTables {
    std::vector<std::optional<std::size_t>> inverse;
    std::vector<char> c_iso;
};

IsoTables build_iso_tables(const SubcategoryPair& pair) {
    const std::size_t n = pair.h.morphism_count();
    IsoTables tables;
    tables.inverse.resize(n);
    tables.c_iso.assign(n, 0);
    for (std::size_t m = 0; m < n; ++m) {
        tables.inverse[m] = pair.h.inverse_of(m);
        if (tables.inverse[m] && pair.morphism_in_c(m) &&
            pair.morphism_in_c(*tables.inverse[m])) {
            tables.c_iso[m] = 1;
        }
    }
    return tables;
}

void validate_span(const SubcategoryPair& pair, const CSpan& span) {
    const FiniteCategory& h = pair.h;
    if (span.leg_u >= h.morphism_count() || span.leg_v >= h.morphism_count()) {
        throw InputError("span leg index out of range");
    }
    const Morphism& leg_u = h.morphisms[span.leg_u];
    const Morphism& leg_v = h.morphisms[span.leg_v];
    if (leg_u.source != span.object_w || leg_v.source != span.object_w ||
        leg_u.target != span.object_u || leg_v.target != span.object_v) {
        throw InputError("span legs do not match the span's objects");
    }
    if (!pair.object_in_c(span.object_u) || !pair.object_in_c(span.object_w) ||
        !pair.object_in_c(span.object_v) || !pair.morphism_in_c(span.leg_u) ||
        !pair.morphism_in_c(span.leg_v)) {
        throw InputError("span does not lie in the subcategory");
    }
}

/// Charts over one leg, sorted by (outer, hat).
std::vector<ArrowChart> charts_for_leg(const FiniteCategory& h, const IsoTables& tables,
                                       std::size_t leg) {
    std::vector<ArrowChart> charts;
    const Morphism& arrow = h.morphisms[leg];
    for (std::size_t hat = 0; hat < h.morphism_count(); ++hat) {
        const Morphism& p = h.morphisms[hat];
        if (!tables.inverse[hat] || p.source != arrow.source || p.target != arrow.source) {
            continue;
        }
        for (std::size_t outer = 0; outer < h.morphism_count(); ++outer) {
            const Morphism& q = h.morphisms[outer];
            if (!tables.inverse[outer] || q.source != arrow.target ||
                q.target != arrow.target) {
                continue;
            }
            if (h.compose(outer, leg) != h.compose(leg, hat)) continue;
            charts.push_back(ArrowChart{outer, hat});
        }
    }
    std::sort(charts.begin(), charts.end());
    return charts;
}

std::vector<HCAtlas> chart_pair_universe(const FiniteCategory& h, const IsoTables& tables,
                                         const CSpan& span) {
    const std::vector<ArrowChart> charts_u = charts_for_leg(h, tables, span.leg_u);
    const std::vector<ArrowChart> charts_v = charts_for_leg(h, tables, span.leg_v);
    std::vector<HCAtlas> universe;
    universe.reserve(charts_u.size() * charts_v.size());
    for (const ArrowChart& cu : charts_u) {
        const std::size_t inv_hat_u = tables.inverse[cu.hat].value();
        for (const ArrowChart& cv : charts_v) {
            universe.push_back(HCAtlas{cu, cv, h.compose(cv.hat, inv_hat_u)});
        }
    }
    return universe;
}

/// Does some H-isomorphism `phi` between the given objects satisfy the leg
/// compatibility square and give a C-isomorphism chart representation?
bool extension_exists(const SubcategoryPair& pair, const IsoTables& tables, std::size_t phi_w,
                      std::size_t leg_from, std::size_t leg_to, std::size_t chart_from_outer,
                      std::size_t chart_to_outer) {
    const FiniteCategory& h = pair.h;
    const Morphism& from = h.morphisms[leg_from];
    const Morphism& to = h.morphisms[leg_to];
    const std::size_t want = h.compose(leg_to, phi_w);
    const std::size_t inv_outer_from = tables.inverse[chart_from_outer].value();
    for (std::size_t phi = 0; phi < h.morphism_count(); ++phi) {
        const Morphism& candidate = h.morphisms[phi];
        if (!tables.inverse[phi] || candidate.source != from.target ||
            candidate.target != to.target) {
            continue;
        }
        if (h.compose(phi, leg_from) != want) continue;
        const std::size_t rep = h.compose(chart_to_outer, h.compose(phi, inv_outer_from));
        if (tables.c_iso[rep]) return true;
    }
    return false;
}

bool isomorphic_with_tables(const SubcategoryPair& pair, const IsoTables& tables,
                            const CSpan& span, const HCAtlas& a, const HCAtlas& b,
                            ClassifyMode mode) {
    const FiniteCategory& h = pair.h;
    const std::size_t w = span.object_w;
    const std::size_t inv_hat_u_a = tables.inverse[a.chart_u.hat].value();
    const std::size_t inv_hat_v_a = tables.inverse[a.chart_v.hat].value();
    for (std::size_t phi_w = 0; phi_w < h.morphism_count(); ++phi_w) {
        const Morphism& m = h.morphisms[phi_w];
        if (!tables.inverse[phi_w] || m.source != w || m.target != w) continue;
        // Copy-preserving: hat representations first, then the independent
        // existence of compatible phi_U and phi_V.
        const std::size_t hat_u_rep = h.compose(b.chart_u.hat, h.compose(phi_w, inv_hat_u_a));
        const std::size_t hat_v_rep = h.compose(b.chart_v.hat, h.compose(phi_w, inv_hat_v_a));
        if (tables.c_iso[hat_u_rep] && tables.c_iso[hat_v_rep] &&
            extension_exists(pair, tables, phi_w, span.leg_u, span.leg_u, a.chart_u.outer,
                             b.chart_u.outer) &&
            extension_exists(pair, tables, phi_w, span.leg_v, span.leg_v, a.chart_v.outer,
                             b.chart_v.outer)) {
            return true;
        }
        if (mode != ClassifyMode::PlusMinus) continue;
        // Copy-exchanging: phi_U goes U -> V against the crossed legs.
        const std::size_t cross_u_rep = h.compose(b.chart_v.hat, h.compose(phi_w, inv_hat_u_a));
        const std::size_t cross_v_rep = h.compose(b.chart_u.hat, h.compose(phi_w, inv_hat_v_a));
        if (tables.c_iso[cross_u_rep] && tables.c_iso[cross_v_rep] &&
            extension_exists(pair, tables, phi_w, span.leg_u, span.leg_v, a.chart_u.outer,
                             b.chart_v.outer) &&
            extension_exists(pair, tables, phi_w, span.leg_v, span.leg_u, a.chart_v.outer,
                             b.chart_u.outer)) {
            return true;
        }
    }
    return false;
}

} // namespace

std::string to_string(ClassifyMode mode) {
    return mode == ClassifyMode::Plain ? "plain" : "pm";
}

CSpan make_cspan(const SubcategoryPair& pair, const std::string& leg_u_id,
                 const std::string& leg_v_id) {
    const FiniteCategory& h = pair.h;
    CSpan span;
    span.leg_u = h.morphism_index(leg_u_id);
    span.leg_v = h.morphism_index(leg_v_id);
    if (h.morphisms[span.leg_u].source != h.morphisms[span.leg_v].source) {
        throw InputError("span legs must share their source W");
    }
    span.object_w = h.morphisms[span.leg_u].source;
    span.object_u = h.morphisms[span.leg_u].target;
    span.object_v = h.morphisms[span.leg_v].target;
    validate_span(pair, span);
    return span;
}

CSpan group_span(const SubcategoryPair& pair) {
    if (pair.h.object_count() != 1) {
        throw InputError("the group span lives in a one-object category");
    }
    CSpan span;
    span.object_u = span.object_w = span.object_v = 0;
    span.leg_u = span.leg_v = pair.h.identity_of(0);
    validate_span(pair, span);
    return span;
}

std::vector<std::pair<std::size_t, std::size_t>> arrow_automorphisms(const FiniteCategory& h,
                                                                     std::size_t f) {
    if (f >= h.morphism_count()) throw InputError("arrow_automorphisms: no such morphism");
    const Morphism& arrow = h.morphisms[f];
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t p = 0; p < h.morphism_count(); ++p) {
        const Morphism& src = h.morphisms[p];
        if (src.source != arrow.source || src.target != arrow.source || !h.is_isomorphism(p)) {
            continue;
        }
        for (std::size_t q = 0; q < h.morphism_count(); ++q) {
            const Morphism& tgt = h.morphisms[q];
            if (tgt.source != arrow.target || tgt.target != arrow.target ||
                !h.is_isomorphism(q)) {
                continue;
            }
            if (h.compose(q, f) == h.compose(f, p)) result.emplace_back(p, q);
        }
    }
    return result;
}

std::vector<HCAtlas> enumerate_hc_atlases(const SubcategoryPair& pair, const CSpan& span) {
    validate_span(pair, span);
    const IsoTables tables = build_iso_tables(pair);
    std::vector<HCAtlas> atlases;
    for (const HCAtlas& atlas : chart_pair_universe(pair.h, tables, span)) {
        if (pair.morphism_in_c(atlas.transition)) atlases.push_back(atlas);
    }
    return atlases;
}

bool are_atlases_isomorphic(const SubcategoryPair& pair, const CSpan& span, const HCAtlas& a,
                            const HCAtlas& b, ClassifyMode mode) {
    validate_span(pair, span);
    const IsoTables tables = build_iso_tables(pair);
    return isomorphic_with_tables(pair, tables, span, a, b, mode);
}

AtlasClassification classify_hc_atlases(const SubcategoryPair& pair, const CSpan& span,
                                        ClassifyMode mode,
                                        const std::optional<std::string>& eta_id) {
    validate_span(pair, span);
    const IsoTables tables = build_iso_tables(pair);
    const FiniteCategory& h = pair.h;

    if (mode == ClassifyMode::PlusMinus) {
        const auto is_eta = [&](std::size_t m) {
            return tables.c_iso[m] && h.morphisms[m].source == span.object_u &&
                   h.morphisms[m].target == span.object_v;
        };
        if (eta_id) {
            if (!is_eta(h.morphism_index(*eta_id))) {
                throw InputError("eta must be a C-isomorphism from U to V");
            }
        } else {
            bool found = false;
            for (std::size_t m = 0; m < h.morphism_count() && !found; ++m) found = is_eta(m);
            if (!found) {
                throw NoEtaError("no C-isomorphism from U to V exists, so the exchanging "
                                 "classification is undefined");
            }
        }
    }

    AtlasClassification result;
    result.universe = chart_pair_universe(h, tables, span);
    for (std::size_t i = 0; i < result.universe.size(); ++i) {
        bool placed = false;
        for (auto& cls : result.classes) {
            if (isomorphic_with_tables(pair, tables, span, result.universe[cls.front()],
                                       result.universe[i], mode)) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) result.classes.push_back({i});
    }
    return result;
}

SpanCosetReport verify_double_coset_characterization(const PermGroup& group,
                                                     const Subgroup& sub) {
    const SubcategoryPair pair = make_group_subcategory_pair(group, sub);
    const CSpan span = group_span(pair);

    SpanCosetReport report;
    report.plain_cosets = double_cosets(group, sub, sub);
    report.pm_cosets = pm_double_cosets(group, sub);

    const auto transition_blocks = [&](const AtlasClassification& classified) {
        std::vector<std::vector<Perm>> blocks;
        blocks.reserve(classified.classes.size());
        for (const auto& cls : classified.classes) {
            std::set<Perm> transitions;
            for (std::size_t idx : cls) {
                transitions.insert(group.elements[classified.universe[idx].transition]);
            }
            blocks.emplace_back(transitions.begin(), transitions.end());
        }
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    };

    report.plain_classes =
        transition_blocks(classify_hc_atlases(pair, span, ClassifyMode::Plain));
    report.pm_classes =
        transition_blocks(classify_hc_atlases(pair, span, ClassifyMode::PlusMinus));
    report.plain_matches = report.plain_classes == report.plain_cosets.blocks;
    report.pm_matches = report.pm_classes == report.pm_cosets.blocks;
    return report;
}

} // namespace branchline
