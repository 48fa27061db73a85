/// @file log_affine.hpp
/// @brief The exact group of log-affine diffeomorphisms x -> e^alpha * x^s of
///        the positive half-line, and double-coset decisions inside it.
///
/// Under the logarithm the map is y -> s*y + alpha, so the pair (alpha, s) of
/// rationals represents the map exactly and composition is the affine action
/// (alpha, s) o (beta, t) = (alpha + s*beta, s*t), closed over the rationals.
#pragma once

#include "branchline/rational.hpp"

#include <optional>
#include <utility>

namespace branchline {

/// x -> e^alpha * x^s on (0, inf); s > 0 keeps the map orientation-preserving.
struct LogAffineDiffeo {
    Rational alpha = 0;
    Rational s = 1;

    friend bool operator==(const LogAffineDiffeo&, const LogAffineDiffeo&) = default;
};

/// Validated constructor; @throws InputError when s <= 0.
LogAffineDiffeo make_log_affine(Rational alpha, Rational s);

/// The identity (alpha = 0, s = 1).
LogAffineDiffeo log_affine_identity();

/// Exact composition f o g = (f.alpha + f.s * g.alpha, f.s * g.s); in map
/// form (a x^s) o (b x^t) = a b^s x^(s t).
LogAffineDiffeo compose(const LogAffineDiffeo& f, const LogAffineDiffeo& g);

/// Exact inverse (-alpha/s, 1/s).
LogAffineDiffeo inverse(const LogAffineDiffeo& f);

/// Double-precision evaluation at x > 0.
double evaluate(const LogAffineDiffeo& f, double x);

/// True iff f extends to a C^1 diffeomorphism of the whole line, which inside
/// this family happens exactly when s = 1 (for s > 1 the derivative at 0+ is
/// 0, for s < 1 it is infinite, so no extension can be C^1).
bool extends_to_line(const LogAffineDiffeo& f);

/// Verdict of the double-coset comparison inside the family, where the coset
/// subgroup is the extendable (s = 1) part: same_plain iff f.s = g.s, same_pm
/// iff additionally allowing the exchange f.s = 1/g.s. When same_plain holds
/// a witness pair (a_hat, b_hat) of extendable maps with
/// b_hat o f o a_hat^-1 = g is returned and replays exactly.
struct DoubleCosetVerdict {
    bool same_plain = false;
    bool same_pm = false;
    std::optional<std::pair<LogAffineDiffeo, LogAffineDiffeo>> witness;
};

DoubleCosetVerdict same_double_coset(const LogAffineDiffeo& f, const LogAffineDiffeo& g);

} // namespace branchline
