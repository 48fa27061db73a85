/// @file wreath.hpp
/// @brief The wreath product W wr Z2, its standard action on a finite group G
///        by (a,b,delta) . g = (b o g o a^-1)^delta, the eta-twisted variant,
///        and exhaustive action-axiom verification.
#pragma once

#include "branchline/perm_group.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace branchline {

/// An element (a, b, delta) of W wr Z2 with a, b in the designated subgroup W
/// and delta in {+1, -1}. The canonical order on elements is lexicographic on
/// (a, b, delta) with +1 before -1.
struct WreathElement {
    Perm a;
    Perm b;
    int delta = +1;

    friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// The data an action runs over: the ambient group G, the subgroup W the
/// wreath elements are drawn from, and (optionally) the twist element eta.
/// When eta is present, the context's action is the eta-twisted one.
struct ActionContext {
    PermGroup G;
    Subgroup W;
    std::optional<Perm> eta;
};

/// The identity (e, e, +1) on `degree` points.
WreathElement wreath_identity(std::size_t degree);

/// Group law of W wr Z2. Reading x = (c, d, delta) and y = (a, b, epsilon):
///   y.epsilon = +1  ->  (c o a, d o b, delta)
///   y.epsilon = -1  ->  (d o a, c o b, -delta)
/// The second components multiply in the stated order; swapping them breaks
/// associativity for nonabelian W (property-tested exhaustively).
/// @throws InputError on degree mismatch.
WreathElement wreath_multiply(const WreathElement& x, const WreathElement& y);

/// Inverse under wreath_multiply: (a^-1, b^-1, +1) resp. (b^-1, a^-1, -1);
/// unit-tested against x * x^-1 = x^-1 * x = identity.
WreathElement wreath_inverse(const WreathElement& x);

/// All 2*|W|^2 elements over W, in canonical order.
std::vector<WreathElement> wreath_elements(const Subgroup& W);

/// Standard action: (a, b, delta) . g = (b o g o a^-1)^delta.
/// @throws InputError if x is not over ctx.W or g is not in ctx.G.
Perm wreath_act(const ActionContext& ctx, const WreathElement& x, const Perm& g);

/// Twisted action for the context's eta:
///   delta = +1  ->  (eta o b o eta^-1) o g o a^-1
///   delta = -1  ->  (eta o a) o g^-1 o (eta o b^-1)
/// @throws InputError if ctx.eta is missing or membership fails.
Perm eta_twisted_act(const ActionContext& ctx, const WreathElement& x, const Perm& g);

/// The context's action: eta-twisted when ctx.eta is present, standard
/// otherwise (eta = identity reduces the twisted rule to the standard one).
Perm context_act(const ActionContext& ctx, const WreathElement& x, const Perm& g);

/// Optional replacement multiplication, used to demonstrate that the axiom
/// sweep detects corrupted group laws (mutation testing hook).
using WreathMultiplyFn =
    std::function<WreathElement(const WreathElement&, const WreathElement&)>;

/// Deliberately wrong multiplication: composes the first components in the
/// reversed order (a o c instead of c o a) in the epsilon = +1 case. Produces
/// associativity counterexamples for every nonabelian W.
WreathElement corrupted_wreath_multiply(const WreathElement& x, const WreathElement& y);

/// Tally of the exhaustive axiom sweep. `identity` counts failures of
/// e . g = g; the four assoc_* fields count failing (x, y, g) triples of
/// (x*y) . g = x . (y . g), keyed by the sign pair (x.delta, y.epsilon).
struct WreathAxiomReport {
    std::uint64_t identity = 0;
    std::uint64_t assoc_pp = 0;
    std::uint64_t assoc_pm = 0;
    std::uint64_t assoc_mp = 0;
    std::uint64_t assoc_mm = 0;
    std::uint64_t checks = 0;
    std::vector<std::string> sample_counterexamples; // at most 8, for reports

    bool passed() const {
        return identity == 0 && assoc_pp == 0 && assoc_pm == 0 && assoc_mp == 0 &&
               assoc_mm == 0;
    }
    std::uint64_t total_counterexamples() const {
        return identity + assoc_pp + assoc_pm + assoc_mp + assoc_mm;
    }
};

/// Exhaustively checks e . g = g and (x*y) . g = x . (y . g) for every pair
/// of wreath elements over ctx.W and every g in ctx.G, under the context's
/// action. With a multiply override the sweep runs the generic (slow) path;
/// otherwise a table-driven fast path is used. Results are identical.
/// @throws InputError when the sweep size is out of the supported range.
WreathAxiomReport verify_action_axioms(const ActionContext& ctx,
                                       const WreathMultiplyFn* multiply_override = nullptr);

/// Orbit of g under the context's action (one application of every wreath
/// element; the orbit is closed because the acting set is a group), sorted.
std::vector<Perm> wreath_orbit(const ActionContext& ctx, const Perm& g);

/// Partition of ctx.G into orbits, blocks listed by least representative.
std::vector<std::vector<Perm>> wreath_orbit_partition(const ActionContext& ctx);

} // namespace branchline
