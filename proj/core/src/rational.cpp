#include "branchline/rational.hpp"

#include "branchline/errors.hpp"

#include <cctype>

namespace branchline {

namespace {

bool is_integer_token(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

// boost's cpp_int string constructor rejects an explicit leading '+'.
std::string_view drop_leading_plus(std::string_view text) {
    return !text.empty() && text[0] == '+' ? text.substr(1) : text;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    if (!is_integer_token(num) || (slash != std::string_view::npos && !is_integer_token(den))) {
        throw InputError("malformed rational: '" + std::string(text) + "'");
    }

    const boost::multiprecision::cpp_int p{std::string(drop_leading_plus(num))};
    boost::multiprecision::cpp_int q = 1;
    if (slash != std::string_view::npos) {
        q = boost::multiprecision::cpp_int{std::string(drop_leading_plus(den))};
        if (q == 0) throw InputError("zero denominator in rational: '" + std::string(text) + "'");
    }
    return Rational(p, q);
}

std::string format_rational(const Rational& value) {
    return value.str(); // boost prints "p" or "p/q" in lowest terms
}

double rational_to_double(const Rational& value) {
    return value.convert_to<double>();
}

} // namespace branchline
