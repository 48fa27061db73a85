#include "branchline/json_io.hpp"

#include "branchline/catalog.hpp"
#include "branchline/errors.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace branchline {
namespace {

TEST(JsonGroups, RoundTripThroughCycles) {
    const PermGroup s3 = symmetric_group(3);
    const Json j = group_to_json(s3);
    EXPECT_EQ(j.at("degree"), 3);
    const PermGroup back = group_from_json(j);
    EXPECT_EQ(back.degree, s3.degree);
    EXPECT_EQ(back.elements, s3.elements);
}

TEST(JsonGroups, ParsesInlineCycleNotation) {
    const Json j = Json::parse(R"({"degree": 3, "generators": [[[0, 1]], [[0, 1, 2]]]})");
    EXPECT_EQ(group_from_json(j).order(), 6u);
    EXPECT_THROW(group_from_json(Json::parse(R"({"generators": []})")), InputError);
    EXPECT_THROW(group_from_json(Json::parse(R"({"degree": 3, "generators": [[[0, 9]]]})")),
                 InputError);
}

TEST(JsonPerms, AcceptsImagesCyclesAndEmpty) {
    EXPECT_EQ(perm_from_json(Json::parse("[1, 0, 2]"), 3), Perm::from_cycles(3, {{0, 1}}));
    EXPECT_EQ(perm_from_json(Json::parse("[[0, 1]]"), 3), Perm::from_cycles(3, {{0, 1}}));
    EXPECT_EQ(perm_from_json(Json::parse("[]"), 3), Perm::identity(3));
    EXPECT_THROW(perm_from_json(Json::parse("[1, 0]"), 3), InputError);  // wrong length
    EXPECT_THROW(perm_from_json(Json::parse("\"(0 1)\""), 3), InputError);
    const Perm p = Perm::from_cycles(4, {{0, 2}, {1, 3}});
    EXPECT_EQ(perm_from_json(perm_to_json(p), 4), p);
}

TEST(JsonSubgroups, ObjectAndBareArrayFormsAgree) {
    const PermGroup s3 = symmetric_group(3);
    const Subgroup a = subgroup_from_json(s3, Json::parse(R"({"generators": [[[0, 1]]]})"));
    const Subgroup b = subgroup_from_json(s3, Json::parse(R"([[[0, 1]]])"));
    EXPECT_EQ(a.elements, b.elements);
    EXPECT_EQ(a.order(), 2u);
    // Degree, when present, must match the parent.
    EXPECT_THROW(
        subgroup_from_json(s3, Json::parse(R"({"degree": 4, "generators": [[[0, 1]]]})")),
        InputError);
    // Generators outside the parent are rejected.
    const PermGroup c3 = cyclic_group(3);
    EXPECT_THROW(subgroup_from_json(c3, Json::parse(R"([[[0, 1]]])")), InputError);
}

TEST(JsonRationals, ExactFormsOnlyNoFloats) {
    EXPECT_EQ(rational_from_json(Json("3/4")), Rational(3, 4));
    EXPECT_EQ(rational_from_json(Json("-7")), Rational(-7));
    EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
    EXPECT_THROW(rational_from_json(Json(2.5)), InputError);
    EXPECT_THROW(rational_from_json(Json("1.5")), InputError);
    EXPECT_THROW(rational_from_json(Json::parse("[1]")), InputError);
}

TEST(JsonLogAffine, RoundTripUsesExactStrings) {
    const LogAffineDiffeo f = make_log_affine(Rational(-7, 3), Rational(5, 2));
    const Json j = log_affine_to_json(f);
    EXPECT_EQ(j.at("alpha"), "-7/3");
    EXPECT_EQ(j.at("s"), "5/2");
    EXPECT_EQ(log_affine_from_json(j), f);
    // Integer inputs are accepted.
    EXPECT_EQ(log_affine_from_json(Json::parse(R"({"alpha": 0, "s": 2})")),
              make_log_affine(0, 2));
    EXPECT_THROW(log_affine_from_json(Json::parse(R"({"alpha": 0, "s": "-2"})")), InputError);
    EXPECT_THROW(log_affine_from_json(Json::parse(R"({"alpha": 0.5, "s": 1})")), InputError);
    EXPECT_THROW(log_affine_from_json(Json::parse(R"({"s": 1})")), InputError);
}

TEST(JsonChartRep, RoundTripPreservesDelta) {
    const ChartRepresentation rep{make_log_affine(1, 1), make_log_affine(Rational(1, 2), 1),
                                  -1};
    const Json j = chart_rep_to_json(rep);
    EXPECT_EQ(j.at("delta"), -1);
    const ChartRepresentation back = chart_rep_from_json(j);
    EXPECT_EQ(back.a, rep.a);
    EXPECT_EQ(back.b, rep.b);
    EXPECT_EQ(back.delta, rep.delta);
    EXPECT_THROW(
        chart_rep_from_json(Json::parse(
            R"({"a": {"alpha": "0", "s": "1"}, "b": {"alpha": "0", "s": "1"}, "delta": 2})")),
        InputError);
}

TEST(JsonClassification, WitnessIsNullExactlyWhenAbsent) {
    ClassificationVerdict none;
    none.verdict = DiffeoVerdict::NotDiffeomorphic;
    const Json j0 = classification_to_json(none);
    EXPECT_EQ(j0.at("verdict"), "NotDiffeomorphic");
    EXPECT_TRUE(j0.at("witness").is_null());

    ClassificationVerdict with;
    with.verdict = DiffeoVerdict::PreserveOnly;
    with.witness = ChartRepresentation{log_affine_identity(), make_log_affine(1, 1), +1};
    const Json j1 = classification_to_json(with);
    EXPECT_EQ(j1.at("verdict"), "PreserveOnly");
    EXPECT_EQ(j1.at("witness").at("delta"), 1);
}

TEST(JsonWreathReport, CarriesExactlyTheFiveAxiomCounters) {
    WreathAxiomReport report;
    report.identity = 1;
    report.assoc_pp = 2;
    report.assoc_pm = 3;
    report.assoc_mp = 4;
    report.assoc_mm = 5;
    const Json j = wreath_report_to_json(report);
    ASSERT_EQ(j.size(), 5u);
    const std::vector<std::string> keys = {"identity", "assoc_pp", "assoc_pm", "assoc_mp",
                                           "assoc_mm"};
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        EXPECT_EQ(it.key(), keys[i]);  // ordered_json preserves insertion order
    }
    EXPECT_EQ(j.at("assoc_mm"), 5);
}

TEST(JsonProbeReport, CarriesVerdictRatiosAndDiagnostics) {
    const ProbeReport report = hadamard_ratio_probe(
        2, 1, nd_identity(Interval{0.0, 10.0}), nd_identity(Interval{0.0, 10.0}),
        default_probe_grid());
    const Json j = probe_report_to_json(report);
    EXPECT_EQ(j.at("verdict"), "Vanishes");
    EXPECT_EQ(j.at("ratios").size(), report.ratios.size());
    EXPECT_TRUE(j.contains("slope"));
    EXPECT_TRUE(j.contains("ratio_min"));
    EXPECT_TRUE(j.contains("ratio_max"));
    EXPECT_TRUE(j.contains("decades"));
    EXPECT_TRUE(j.contains("monotone_decades"));
}

TEST(JsonSpanReport, HasPlainAndPmSections) {
    const PermGroup s3 = symmetric_group(3);
    const Subgroup w = subgroup_from_generators(s3, {Perm::from_cycles(3, {{0, 1}})});
    const Json j = span_report_to_json(verify_double_coset_characterization(s3, w));
    for (const char* mode : {"plain", "pm"}) {
        EXPECT_TRUE(j.at(mode).at("matches").get<bool>());
        EXPECT_EQ(j.at(mode).at("cosets").size(), 2u);
        EXPECT_EQ(j.at(mode).at("atlas_classes").size(), 2u);
    }
}

TEST(JsonPartitions, SerializeAsArraysOfImageSequences) {
    const PermGroup s3 = symmetric_group(3);
    const Subgroup w = subgroup_from_generators(s3, {Perm::from_cycles(3, {{0, 1}})});
    const Json j = partition_to_json(double_cosets(s3, w, w).blocks);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0][0], Json::parse("[0, 1, 2]"));  // identity's image sequence
    EXPECT_EQ(j[0][1], Json::parse("[1, 0, 2]"));  // the transposition (0 1)
}

TEST(JsonDeterminism, SerializationIsByteStable) {
    const PermGroup s3 = symmetric_group(3);
    const Json a = group_to_json(s3);
    const Json b = group_to_json(symmetric_group(3));
    EXPECT_EQ(a.dump(2), b.dump(2));

    const ProbeReport report = hadamard_ratio_probe(
        2, 2, nd_identity(Interval{0.0, 10.0}), nd_identity(Interval{0.0, 10.0}),
        default_probe_grid());
    EXPECT_EQ(probe_report_to_json(report).dump(), probe_report_to_json(report).dump());
}

} // namespace
} // namespace branchline
