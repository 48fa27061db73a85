#include "branchline/manifold.hpp"

#include "branchline/errors.hpp"
#include "branchline/rational.hpp"

#include <cmath>
#include <string>

namespace branchline {

namespace {

bool is_glued_coordinate(ManifoldKind kind, double x) {
    return kind == ManifoldKind::Y ? x > 0 : x != 0;
}

/// The transition as a map of the glued region: plain power map for Y,
/// odd (sign-symmetric) extension for L.
double transition_eval(const MinimalAtlas& atlas, const LogAffineDiffeo& g, double x) {
    if (atlas.kind == ManifoldKind::Y) return evaluate(g, x);
    const double y = evaluate(g, std::abs(x));
    return x < 0 ? -y : y;
}

} // namespace

std::string to_string(ManifoldKind kind) {
    return kind == ManifoldKind::Y ? "Y" : "L";
}

ManifoldKind manifold_kind_from_string(const std::string& text) {
    if (text == "Y" || text == "y") return ManifoldKind::Y;
    if (text == "L" || text == "l") return ManifoldKind::L;
    throw InputError("unknown manifold kind: '" + text + "' (expected Y or L)");
}

bool points_equal(ManifoldKind kind, const GluedPoint& p, const GluedPoint& q) {
    if (p.x != q.x) return false;
    if (p.copy == q.copy) return true;
    return is_glued_coordinate(kind, p.x);
}

bool is_separable_pair(ManifoldKind kind, const GluedPoint& p, const GluedPoint& q) {
    if (points_equal(kind, p, q)) {
        throw InputError("separability is asked of distinct points, but these are identified");
    }
    return !(p.x == 0 && q.x == 0 && p.copy != q.copy);
}

bool points_identified_within(ManifoldKind kind, const GluedPoint& p, const GluedPoint& q,
                              double rel_tol) {
    const double scale = std::max({1.0, std::abs(p.x), std::abs(q.x)});
    if (!(std::abs(p.x - q.x) <= rel_tol * scale)) return false;
    if (p.copy == q.copy) return true;
    if (kind == ManifoldKind::Y) return p.x > 0 && q.x > 0;
    return p.x * q.x > 0;
}

MinimalAtlas minimal_atlas_from_transition(ManifoldKind kind, const LogAffineDiffeo& g) {
    if (!(g.s > 0)) throw InputError("transition must be orientation-preserving (s > 0)");
    return MinimalAtlas{kind, g};
}

std::string to_string(DiffeoVerdict verdict) {
    switch (verdict) {
        case DiffeoVerdict::PreserveOnly: return "PreserveOnly";
        case DiffeoVerdict::ExchangeOnly: return "ExchangeOnly";
        case DiffeoVerdict::Both: return "Both";
        case DiffeoVerdict::NotDiffeomorphic: return "NotDiffeomorphic";
    }
    throw InputError("unhandled verdict");
}

namespace {

ChartRepresentation preserve_witness_for(const LogAffineDiffeo& g_a, const LogAffineDiffeo& g_b) {
    // b o g_A o a^-1 = g_B with a = id forces b = (alpha_B - alpha_A, 1).
    return ChartRepresentation{log_affine_identity(),
                               make_log_affine(g_b.alpha - g_a.alpha, 1), +1};
}

ChartRepresentation exchange_witness_for(const LogAffineDiffeo& g_a, const LogAffineDiffeo& g_b) {
    // b o g_A o a^-1 = g_B^-1 with a = id forces b = (-alpha_B * s_A - alpha_A, 1).
    return ChartRepresentation{log_affine_identity(),
                               make_log_affine(-g_b.alpha * g_a.s - g_a.alpha, 1), -1};
}

} // namespace

ClassificationVerdict classify_pair(const MinimalAtlas& A, const MinimalAtlas& B) {
    if (A.kind != B.kind) throw InputError("classify_pair requires atlases of the same kind");
    const LogAffineDiffeo& g_a = A.transition;
    const LogAffineDiffeo& g_b = B.transition;
    const bool preserving = g_a.s == g_b.s;
    const bool exchanging = g_a.s * g_b.s == 1;
    ClassificationVerdict result;
    if (preserving && exchanging) {
        result.verdict = DiffeoVerdict::Both;
        result.witness = preserve_witness_for(g_a, g_b);
    } else if (preserving) {
        result.verdict = DiffeoVerdict::PreserveOnly;
        result.witness = preserve_witness_for(g_a, g_b);
    } else if (exchanging) {
        result.verdict = DiffeoVerdict::ExchangeOnly;
        result.witness = exchange_witness_for(g_a, g_b);
    } else {
        result.verdict = DiffeoVerdict::NotDiffeomorphic;
    }
    return result;
}

std::optional<ChartRepresentation> exchange_witness(const MinimalAtlas& A,
                                                    const MinimalAtlas& B) {
    if (A.kind != B.kind) throw InputError("exchange_witness requires atlases of the same kind");
    if (A.transition.s * B.transition.s != 1) return std::nullopt;
    return exchange_witness_for(A.transition, B.transition);
}

bool is_canonical_class(const MinimalAtlas& A) { return extends_to_line(A.transition); }

double chart_u(ManifoldKind kind, const GluedPoint& p) {
    if (p.copy != 0 && !is_glued_coordinate(kind, p.x)) {
        throw InputError("point lies outside the first chart's domain");
    }
    return p.x;
}

GluedPoint chart_u_inverse(ManifoldKind /*kind*/, double coordinate) {
    return GluedPoint{0, coordinate};
}

double chart_v(const MinimalAtlas& atlas, const GluedPoint& p) {
    if (is_glued_coordinate(atlas.kind, p.x)) {
        return transition_eval(atlas, atlas.transition, p.x);
    }
    if (p.copy != 1) throw InputError("point lies outside the second chart's domain");
    return p.x;
}

GluedPoint chart_v_inverse(const MinimalAtlas& atlas, double coordinate) {
    if (is_glued_coordinate(atlas.kind, coordinate)) {
        const LogAffineDiffeo back = inverse(atlas.transition);
        return GluedPoint{1, transition_eval(atlas, back, coordinate)};
    }
    return GluedPoint{1, coordinate};
}

GluedMap build_diffeomorphism(const MinimalAtlas& A, const MinimalAtlas& B,
                              const ChartRepresentation& rep) {
    if (A.kind != B.kind) {
        throw InputError("build_diffeomorphism requires atlases of the same kind");
    }
    if (rep.delta != 1 && rep.delta != -1) throw InputError("delta must be +1 or -1");
    if (!extends_to_line(rep.a) || !extends_to_line(rep.b)) {
        throw InputError("chart representation maps must extend to the whole line (s = 1)");
    }
    const LogAffineDiffeo lhs = compose(rep.b, compose(A.transition, inverse(rep.a)));
    const LogAffineDiffeo rhs = rep.delta == 1 ? B.transition : inverse(B.transition);
    if (!(lhs == rhs)) {
        throw PreconditionError(
            "chart representation does not relate the transitions: residual alpha = " +
            format_rational(lhs.alpha - rhs.alpha) +
            ", residual s factor = " + format_rational(lhs.s / rhs.s));
    }

    const double scale_a = std::exp(rational_to_double(rep.a.alpha));
    const double scale_b = std::exp(rational_to_double(rep.b.alpha));
    const int delta = rep.delta;
    const MinimalAtlas atlas_a = A;
    const MinimalAtlas atlas_b = B;
    return [scale_a, scale_b, delta, atlas_a, atlas_b](const GluedPoint& p) -> GluedPoint {
        if (p.copy == 0) {
            const double mapped = scale_a * p.x;
            if (delta == 1) return GluedPoint{0, mapped};
            return chart_v_inverse(atlas_b, mapped);
        }
        const double mapped = scale_b * chart_v(atlas_a, p);
        if (delta == 1) return chart_v_inverse(atlas_b, mapped);
        return GluedPoint{0, mapped};
    };
}

} // namespace branchline
