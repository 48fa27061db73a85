#include "branchline/log_affine.hpp"

#include "branchline/errors.hpp"

#include <cmath>

namespace branchline {

LogAffineDiffeo make_log_affine(Rational alpha, Rational s) {
    if (s <= 0) throw InputError("log-affine exponent s must be positive");
    return LogAffineDiffeo{std::move(alpha), std::move(s)};
}

LogAffineDiffeo log_affine_identity() {
    return LogAffineDiffeo{0, 1};
}

LogAffineDiffeo compose(const LogAffineDiffeo& f, const LogAffineDiffeo& g) {
    return LogAffineDiffeo{f.alpha + f.s * g.alpha, f.s * g.s};
}

LogAffineDiffeo inverse(const LogAffineDiffeo& f) {
    return LogAffineDiffeo{-f.alpha / f.s, 1 / f.s};
}

double evaluate(const LogAffineDiffeo& f, double x) {
    return std::exp(rational_to_double(f.alpha)) * std::pow(x, rational_to_double(f.s));
}

bool extends_to_line(const LogAffineDiffeo& f) {
    return f.s == 1;
}

DoubleCosetVerdict same_double_coset(const LogAffineDiffeo& f, const LogAffineDiffeo& g) {
    DoubleCosetVerdict verdict;
    verdict.same_plain = (f.s == g.s);
    verdict.same_pm = verdict.same_plain || (f.s == Rational(1) / g.s);
    if (verdict.same_plain) {
        // Solve b_hat o f o a_hat^-1 = g with extendable (s = 1) witnesses:
        // choosing a_hat = id forces b_hat = g o f^-1 = (g.alpha - f.alpha, 1).
        const LogAffineDiffeo a_hat = log_affine_identity();
        const LogAffineDiffeo b_hat{g.alpha - f.alpha, 1};
        verdict.witness = std::make_pair(a_hat, b_hat);
    }
    return verdict;
}

} // namespace branchline
