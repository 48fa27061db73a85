/// @file perm.hpp
/// @brief Permutations of {0,...,n-1} with composition, inverse and cycle I/O.
///
/// Composition convention (used everywhere in the library): the RIGHT factor
/// acts first, i.e. compose(f, g) maps x to f(g(x)). This matches the usual
/// function-composition reading of "f o g".
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace branchline {

/// A permutation of {0,...,degree()-1}, stored as its image sequence:
/// images()[i] is the image of point i. The image sequence is always a
/// bijection; constructors validate and throw InputError otherwise.
class Perm {
public:
    /// Identity on n points (n >= 1).
    static Perm identity(std::size_t n);

    /// From an explicit image sequence; validates bijectivity.
    explicit Perm(std::vector<std::uint8_t> images);

    /// From disjoint-cycle notation over n points, e.g. {{0,1},{2,3}}.
    /// Cycles are applied right-to-left (composition order); for disjoint
    /// cycles the order is immaterial. Fixed points may be omitted.
    static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

    std::size_t degree() const { return images_.size(); }
    std::uint8_t operator()(std::uint8_t point) const { return images_[point]; }
    const std::vector<std::uint8_t>& images() const { return images_; }

    bool is_identity() const;
    Perm inverse() const;

    /// Decompose into disjoint cycles of length >= 2, each rotated to start
    /// at its least point, listed by increasing least point.
    std::vector<std::vector<std::size_t>> cycles() const;

    /// Lexicographic order on image sequences: the canonical total order used
    /// for all deterministic element listings.
    friend std::strong_ordering operator<=>(const Perm& lhs, const Perm& rhs) = default;
    friend bool operator==(const Perm& lhs, const Perm& rhs) = default;

private:
    std::vector<std::uint8_t> images_;
};

/// f o g: apply g first, then f. @throws InputError on degree mismatch.
Perm compose(const Perm& f, const Perm& g);

/// Multiplicative order of p in the symmetric group.
std::size_t perm_order(const Perm& p);

/// One-line text form, e.g. "(0 1)(2 3)" or "id" for the identity.
std::string perm_to_string(const Perm& p);

} // namespace branchline
