/// @file rational.hpp
/// @brief Exact rational scalar type plus string parsing/formatting.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace branchline {

/// Arbitrary-precision rational; the exact scalar for every symbolic
/// computation in the library. Always stored in lowest terms with a
/// positive denominator (boost keeps it canonical).
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p", "p/q", "-p/q" (arbitrary precision, optional leading +/-).
/// @throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Format in lowest terms: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

/// Nearest double (for plotting/probing; the exact value stays authoritative).
double rational_to_double(const Rational& value);

} // namespace branchline
