#include "branchline/wreath.hpp"

#include "branchline/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace branchline {

namespace {

void require_same_degree(const WreathElement& x, const WreathElement& y) {
    if (x.a.degree() != y.a.degree()) {
        throw InputError("wreath elements live over different groups");
    }
}

void require_membership(const ActionContext& ctx, const WreathElement& x, const Perm& g) {
    if (!contains(ctx.W, x.a) || !contains(ctx.W, x.b)) {
        throw InputError("wreath element components must lie in W");
    }
    if (!contains(ctx.G, g)) {
        throw InputError("acted-on element must lie in G");
    }
}

Perm power_sign(const Perm& p, int delta) {
    return delta == +1 ? p : p.inverse();
}

/// Index tables shared by the fast axiom sweep: W-internal multiplication,
/// per-wreath-element action maps over G's canonical indices.
struct SweepTables {
    std::size_t w_order = 0;
    std::size_t g_order = 0;
    std::size_t n_wreath = 0;
    std::vector<std::uint16_t> wmul;      // w_order x w_order
    std::vector<std::uint16_t> winv;      // w_order
    std::vector<std::uint16_t> action;    // n_wreath x g_order
    std::uint16_t w_identity = 0;

    std::size_t wreath_index(std::size_t ia, std::size_t ib, int delta) const {
        return (ia * w_order + ib) * 2 + (delta == -1 ? 1 : 0);
    }
};

SweepTables build_sweep_tables(const ActionContext& ctx) {
    SweepTables t;
    t.w_order = ctx.W.order();
    t.g_order = ctx.G.order();
    t.n_wreath = 2 * t.w_order * t.w_order;

    const GroupIndexTables g_tables = build_index_tables(ctx.G);

    // Indices of W's elements inside G, plus W-internal tables.
    std::vector<std::uint16_t> w_in_g(t.w_order);
    std::map<std::uint16_t, std::uint16_t> g_to_w;
    for (std::size_t i = 0; i < t.w_order; ++i) {
        const auto idx = element_index(ctx.G, ctx.W.elements[i]);
        if (!idx) throw InputError("subgroup element missing from the parent group");
        w_in_g[i] = static_cast<std::uint16_t>(*idx);
        g_to_w[w_in_g[i]] = static_cast<std::uint16_t>(i);
        if (ctx.W.elements[i].is_identity()) t.w_identity = static_cast<std::uint16_t>(i);
    }
    t.wmul.resize(t.w_order * t.w_order);
    t.winv.resize(t.w_order);
    for (std::size_t i = 0; i < t.w_order; ++i) {
        t.winv[i] = g_to_w.at(g_tables.inv[w_in_g[i]]);
        for (std::size_t j = 0; j < t.w_order; ++j) {
            t.wmul[i * t.w_order + j] = g_to_w.at(g_tables.multiply(w_in_g[i], w_in_g[j]));
        }
    }

    // Per-element action maps. With eta = identity the twisted rule is the
    // standard one, so a single code path covers both.
    std::uint16_t eta_idx = g_tables.identity;
    if (ctx.eta) {
        const auto idx = element_index(ctx.G, *ctx.eta);
        if (!idx) throw InputError("eta must be an element of G");
        eta_idx = static_cast<std::uint16_t>(*idx);
    }
    const std::uint16_t eta_inv = g_tables.inv[eta_idx];

    t.action.resize(t.n_wreath * t.g_order);
    for (std::size_t ia = 0; ia < t.w_order; ++ia) {
        const std::uint16_t a_in_g = w_in_g[ia];
        const std::uint16_t a_inv = g_tables.inv[a_in_g];
        for (std::size_t ib = 0; ib < t.w_order; ++ib) {
            const std::uint16_t b_in_g = w_in_g[ib];
            // delta = +1: (eta b eta^-1) o g o a^-1
            const std::uint16_t conj_b =
                g_tables.multiply(g_tables.multiply(eta_idx, b_in_g), eta_inv);
            std::uint16_t* plus_row =
                t.action.data() + t.wreath_index(ia, ib, +1) * t.g_order;
            for (std::size_t g = 0; g < t.g_order; ++g) {
                plus_row[g] = g_tables.multiply(
                    g_tables.multiply(conj_b, static_cast<std::uint16_t>(g)), a_inv);
            }
            // delta = -1: (eta a) o g^-1 o (eta b^-1)
            const std::uint16_t left = g_tables.multiply(eta_idx, a_in_g);
            const std::uint16_t right = g_tables.multiply(eta_idx, g_tables.inv[b_in_g]);
            std::uint16_t* minus_row =
                t.action.data() + t.wreath_index(ia, ib, -1) * t.g_order;
            for (std::size_t g = 0; g < t.g_order; ++g) {
                minus_row[g] = g_tables.multiply(
                    g_tables.multiply(left, g_tables.inv[g]), right);
            }
        }
    }
    return t;
}

void record_sample(WreathAxiomReport& report, std::string text) {
    if (report.sample_counterexamples.size() < 8) {
        report.sample_counterexamples.push_back(std::move(text));
    }
}

std::uint64_t& assoc_counter(WreathAxiomReport& report, int delta, int epsilon) {
    if (delta == +1) return epsilon == +1 ? report.assoc_pp : report.assoc_pm;
    return epsilon == +1 ? report.assoc_mp : report.assoc_mm;
}

WreathAxiomReport verify_axioms_fast(const ActionContext& ctx) {
    const SweepTables t = build_sweep_tables(ctx);
    WreathAxiomReport report;

    // Identity axiom: the identity's action map must be the identity map.
    const std::uint16_t* id_row =
        t.action.data() + t.wreath_index(t.w_identity, t.w_identity, +1) * t.g_order;
    for (std::size_t g = 0; g < t.g_order; ++g) {
        ++report.checks;
        if (id_row[g] != g) {
            ++report.identity;
            record_sample(report, "identity axiom fails at g = " +
                                      perm_to_string(ctx.G.elements[g]));
        }
    }

    // Associativity: map(x * y) must equal map(x) o map(y) pointwise.
    const std::size_t w = t.w_order;
    for (std::size_t ic = 0; ic < w; ++ic) {
        for (std::size_t id_ = 0; id_ < w; ++id_) {
            for (int dx = 0; dx < 2; ++dx) {
                const int delta = dx == 0 ? +1 : -1;
                const std::uint16_t* x_row =
                    t.action.data() + t.wreath_index(ic, id_, delta) * t.g_order;
                for (std::size_t ia = 0; ia < w; ++ia) {
                    for (std::size_t ib = 0; ib < w; ++ib) {
                        for (int de = 0; de < 2; ++de) {
                            const int epsilon = de == 0 ? +1 : -1;
                            // z = x * y per the wreath group law.
                            std::size_t za, zb;
                            int zd;
                            if (epsilon == +1) {
                                za = t.wmul[ic * w + ia];
                                zb = t.wmul[id_ * w + ib];
                                zd = delta;
                            } else {
                                za = t.wmul[id_ * w + ia];
                                zb = t.wmul[ic * w + ib];
                                zd = -delta;
                            }
                            const std::uint16_t* y_row =
                                t.action.data() + t.wreath_index(ia, ib, epsilon) * t.g_order;
                            const std::uint16_t* z_row =
                                t.action.data() + t.wreath_index(za, zb, zd) * t.g_order;
                            std::uint64_t bad = 0;
                            for (std::size_t g = 0; g < t.g_order; ++g) {
                                bad += z_row[g] != x_row[y_row[g]];
                            }
                            report.checks += t.g_order;
                            if (bad != 0) {
                                assoc_counter(report, delta, epsilon) += bad;
                                record_sample(
                                    report,
                                    "associativity fails for sign pair (" +
                                        std::string(delta == 1 ? "+" : "-") + "," +
                                        std::string(epsilon == 1 ? "+" : "-") + ")");
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

WreathAxiomReport verify_axioms_generic(const ActionContext& ctx,
                                        const WreathMultiplyFn& multiply) {
    WreathAxiomReport report;
    const std::vector<WreathElement> elements = wreath_elements(ctx.W);
    const WreathElement identity = wreath_identity(ctx.W.degree);

    for (const Perm& g : ctx.G.elements) {
        ++report.checks;
        if (context_act(ctx, identity, g) != g) {
            ++report.identity;
            record_sample(report, "identity axiom fails at g = " + perm_to_string(g));
        }
    }

    for (const WreathElement& x : elements) {
        for (const WreathElement& y : elements) {
            const WreathElement z = multiply(x, y);
            for (const Perm& g : ctx.G.elements) {
                ++report.checks;
                if (context_act(ctx, z, g) != context_act(ctx, x, context_act(ctx, y, g))) {
                    ++assoc_counter(report, x.delta, y.delta);
                    record_sample(report,
                                  "associativity fails: x = (" + perm_to_string(x.a) + ", " +
                                      perm_to_string(x.b) + ", " +
                                      (x.delta == 1 ? "+1" : "-1") + "), y = (" +
                                      perm_to_string(y.a) + ", " + perm_to_string(y.b) +
                                      ", " + (y.delta == 1 ? "+1" : "-1") +
                                      "), g = " + perm_to_string(g));
                }
            }
        }
    }
    return report;
}

} // namespace

WreathElement wreath_identity(std::size_t degree) {
    return WreathElement{Perm::identity(degree), Perm::identity(degree), +1};
}

WreathElement wreath_multiply(const WreathElement& x, const WreathElement& y) {
    require_same_degree(x, y);
    if (y.delta == +1) {
        return WreathElement{compose(x.a, y.a), compose(x.b, y.b), x.delta};
    }
    return WreathElement{compose(x.b, y.a), compose(x.a, y.b), -x.delta};
}

WreathElement wreath_inverse(const WreathElement& x) {
    if (x.delta == +1) {
        return WreathElement{x.a.inverse(), x.b.inverse(), +1};
    }
    return WreathElement{x.b.inverse(), x.a.inverse(), -1};
}

std::vector<WreathElement> wreath_elements(const Subgroup& W) {
    std::vector<WreathElement> out;
    out.reserve(2 * W.order() * W.order());
    for (const Perm& a : W.elements) {
        for (const Perm& b : W.elements) {
            out.push_back(WreathElement{a, b, +1});
            out.push_back(WreathElement{a, b, -1});
        }
    }
    return out;
}

Perm wreath_act(const ActionContext& ctx, const WreathElement& x, const Perm& g) {
    require_membership(ctx, x, g);
    return power_sign(compose(compose(x.b, g), x.a.inverse()), x.delta);
}

Perm eta_twisted_act(const ActionContext& ctx, const WreathElement& x, const Perm& g) {
    if (!ctx.eta) throw InputError("eta-twisted action requires eta in the context");
    require_membership(ctx, x, g);
    const Perm& eta = *ctx.eta;
    if (eta.degree() != ctx.G.degree || !contains(ctx.G, eta)) {
        throw InputError("eta must be an element of G");
    }
    if (x.delta == +1) {
        const Perm conj = compose(compose(eta, x.b), eta.inverse());
        return compose(compose(conj, g), x.a.inverse());
    }
    const Perm left = compose(eta, x.a);
    const Perm right = compose(eta, x.b.inverse());
    return compose(compose(left, g.inverse()), right);
}

Perm context_act(const ActionContext& ctx, const WreathElement& x, const Perm& g) {
    return ctx.eta ? eta_twisted_act(ctx, x, g) : wreath_act(ctx, x, g);
}

WreathElement corrupted_wreath_multiply(const WreathElement& x, const WreathElement& y) {
    require_same_degree(x, y);
    if (y.delta == +1) {
        return WreathElement{compose(y.a, x.a), compose(x.b, y.b), x.delta};
    }
    return WreathElement{compose(x.b, y.a), compose(x.a, y.b), -x.delta};
}

WreathAxiomReport verify_action_axioms(const ActionContext& ctx,
                                       const WreathMultiplyFn* multiply_override) {
    if (!is_subgroup_of(ctx.G, ctx.W)) {
        throw InputError("W is not contained in G");
    }
    const double n_wreath = 2.0 * ctx.W.order() * ctx.W.order();
    if (n_wreath * n_wreath * ctx.G.order() > 5e9) {
        throw InputError("action axiom sweep too large");
    }
    if (multiply_override) {
        return verify_axioms_generic(ctx, *multiply_override);
    }
    return verify_axioms_fast(ctx);
}

std::vector<Perm> wreath_orbit(const ActionContext& ctx, const Perm& g) {
    std::set<Perm> orbit;
    for (const WreathElement& x : wreath_elements(ctx.W)) {
        orbit.insert(context_act(ctx, x, g));
    }
    return {orbit.begin(), orbit.end()};
}

std::vector<std::vector<Perm>> wreath_orbit_partition(const ActionContext& ctx) {
    std::vector<std::vector<Perm>> blocks;
    std::set<Perm> assigned;
    for (const Perm& g : ctx.G.elements) {
        if (assigned.contains(g)) continue;
        std::vector<Perm> orbit = wreath_orbit(ctx, g);
        assigned.insert(orbit.begin(), orbit.end());
        blocks.push_back(std::move(orbit));
    }
    return blocks;
}

} // namespace branchline
