/// @file json_io.hpp
/// @brief JSON interchange for every CLI-facing value. Rationals travel as
///        exact "p/q" strings (plain integers are accepted on input),
///        permutations as image sequences (cycle lists accepted on input),
///        groups as {"degree", "generators"} with generators in cycle form,
///        and partitions as arrays of arrays of image sequences.
#pragma once

#include "branchline/cosets.hpp"
#include "branchline/hadamard.hpp"
#include "branchline/log_affine.hpp"
#include "branchline/manifold.hpp"
#include "branchline/perm_group.hpp"
#include "branchline/span_atlas.hpp"
#include "branchline/wreath.hpp"

#include <nlohmann/json.hpp>

namespace branchline {

/// Key order is preserved so identical inputs always serialize to identical
/// bytes.
using Json = nlohmann::ordered_json;

/// {"degree": n, "generators": [generator, ...]} with each generator a list
/// of cycles and each cycle a list of point indices.
/// @throws InputError on malformed or inconsistent data.
PermGroup group_from_json(const Json& j);
Json group_to_json(const PermGroup& group);

/// A permutation: either a flat image sequence [1,0,2] (length must equal
/// `degree`) or a list of cycles [[0,1],[2,3]]. An empty array is the
/// identity.
Perm perm_from_json(const Json& j, std::size_t degree);
/// Image-sequence form.
Json perm_to_json(const Perm& p);

/// Subgroup of `parent` as {"generators": [...]} (optionally with "degree",
/// which must match) or a bare generator list.
Subgroup subgroup_from_json(const PermGroup& parent, const Json& j);

/// Arrays of arrays of image sequences.
Json partition_to_json(const std::vector<std::vector<Perm>>& blocks);

/// Exact rational: "p/q" / "p" strings or integer literals. Floating-point
/// values are rejected to keep arithmetic exact.
Rational rational_from_json(const Json& j);

/// {"alpha": "p/q", "s": "p/q"} (strings on output; string or integer
/// accepted on input). @throws InputError when s <= 0.
LogAffineDiffeo log_affine_from_json(const Json& j);
Json log_affine_to_json(const LogAffineDiffeo& f);

/// {"a": {...}, "b": {...}, "delta": 1|-1}.
ChartRepresentation chart_rep_from_json(const Json& j);
Json chart_rep_to_json(const ChartRepresentation& rep);

/// {"verdict": "...", "witness": {...}|null}.
Json classification_to_json(const ClassificationVerdict& verdict);

/// Counterexample counts per axiom case:
/// {"identity", "assoc_pp", "assoc_pm", "assoc_mp", "assoc_mm"}.
Json wreath_report_to_json(const WreathAxiomReport& report);

/// {"verdict": "...", "ratios": [...]} plus scalar trend diagnostics.
Json probe_report_to_json(const ProbeReport& report);

/// {"plain": {"matches", "cosets", "atlas_classes"}, "pm": {...}}.
Json span_report_to_json(const SpanCosetReport& report);

} // namespace branchline
