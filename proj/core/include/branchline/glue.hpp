/// @file glue.hpp
/// @brief Gluing a chart map along an overlap: given the transition g on the
///        overlap W and a map b on V that is compatible with g, produce the
///        map a = g^-1 o b on W extended by the identity over the rest of U.
#pragma once

#include "branchline/numeric_diffeo.hpp"

#include <cstddef>
#include <string>

namespace branchline {

/// Hypotheses checked on sample grids (tolerance tol::kGlue), each named in
/// the PreconditionError raised when it fails:
///   (a) b maps the overlap W onto itself (endpoints fixed in the limit);
///   (b) b is the identity on the neighborhood hat_h_v;
///   (c) b agrees with g on W intersect hat_h_v.
///
/// W is g's domain, V is b's domain; U is recovered as hat_h_u united with W
/// (they must overlap so the union is an interval). The result a satisfies
/// a = g^-1 o b on W and a = identity on U minus W, is continuous across the
/// seam, and obeys g = b o a^-1 on sampled W within tol::kGlue.
/// @throws InputError for malformed interval geometry or non-monotone data,
///         PreconditionError for a violated hypothesis clause.
NumericDiffeo glue_to_canonical(const NumericDiffeo& g, const NumericDiffeo& b,
                                Interval hat_h_u, Interval hat_h_v,
                                std::size_t samples = 0 /* 0 = tol::kGlueSamples */);

/// Max residual of the seam relation g = b o a^-1 over `samples` uniform
/// points of W (used by callers replaying the construction).
double glue_relation_residual(const NumericDiffeo& g, const NumericDiffeo& b,
                              const NumericDiffeo& a, std::size_t samples);

/// Max residual of |a(x) - x| over `samples` uniform points of U minus W.
double glue_identity_residual(const NumericDiffeo& a, Interval overlap_w,
                              std::size_t samples);

/// A ready-made gluing configuration (used by tests and the CLI):
/// U = (0,2), V = (1,3), W = (1,2), hat_h_u = (0, 1.3), hat_h_v = (1.9, 3).
struct GluingExample {
    NumericDiffeo g;  ///< transition on W
    NumericDiffeo b;  ///< chart map on V
    Interval hat_h_u;
    Interval hat_h_v;
};

/// Named examples:
///   "identity"            g = id, b = id (trivial positive case)
///   "bump"                g a smooth bump shift flat near both ends of W,
///                         b = id (nontrivial positive case)
///   "bump-pair"           same g, b a distinct bump shift flat near W's ends
///   "violate-w-image"     b = x + 1/2 on V: breaks clause (a)
///   "violate-fixed-ends"  b shifted inside hat_h_v: breaks clause (b)
///   "violate-overlap-match" hat_h_v widened so clause (c) fails
/// @throws InputError for an unknown name.
GluingExample gluing_example(const std::string& name);

} // namespace branchline
