#include "branchline/json_io.hpp"

#include "branchline/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace branchline {

namespace {

std::vector<std::vector<std::size_t>> cycles_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("cycle form must be an array of cycles");
    std::vector<std::vector<std::size_t>> cycles;
    for (const Json& cyc : j) {
        if (!cyc.is_array()) throw InputError("each cycle must be an array of point indices");
        std::vector<std::size_t> points;
        for (const Json& v : cyc) {
            if (!v.is_number_unsigned()) {
                throw InputError("cycle entries must be non-negative integers");
            }
            points.push_back(v.get<std::size_t>());
        }
        cycles.push_back(std::move(points));
    }
    return cycles;
}

std::vector<Perm> generators_from_json(const Json& j, std::size_t degree) {
    if (!j.is_array()) throw InputError("\"generators\" must be an array");
    std::vector<Perm> generators;
    for (const Json& gen : j) {
        generators.push_back(Perm::from_cycles(degree, cycles_from_json(gen)));
    }
    return generators;
}

} // namespace

PermGroup group_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("a group must be a JSON object");
    if (!j.contains("degree") || !j["degree"].is_number_unsigned()) {
        throw InputError("a group needs an unsigned \"degree\"");
    }
    if (!j.contains("generators")) throw InputError("a group needs \"generators\"");
    const std::size_t degree = j["degree"].get<std::size_t>();
    return closure(degree, generators_from_json(j["generators"], degree));
}

Json group_to_json(const PermGroup& group) {
    Json j = Json::object();
    j["degree"] = group.degree;
    Json gens = Json::array();
    for (const Perm& g : group.generators) {
        Json cycles = Json::array();
        for (const auto& cyc : g.cycles()) cycles.push_back(cyc);
        gens.push_back(std::move(cycles));
    }
    j["generators"] = std::move(gens);
    return j;
}

Perm perm_from_json(const Json& j, std::size_t degree) {
    if (!j.is_array()) throw InputError("a permutation must be a JSON array");
    if (j.empty()) return Perm::identity(degree);
    if (j.front().is_array()) return Perm::from_cycles(degree, cycles_from_json(j));
    std::vector<std::uint8_t> images;
    for (const Json& v : j) {
        if (!v.is_number_unsigned()) throw InputError("images must be non-negative integers");
        images.push_back(v.get<std::uint8_t>());
    }
    if (images.size() != degree) {
        throw InputError("image sequence length must equal the degree " +
                         std::to_string(degree));
    }
    return Perm(std::move(images));
}

Json perm_to_json(const Perm& p) {
    Json images = Json::array();
    for (std::uint8_t v : p.images()) images.push_back(static_cast<std::size_t>(v));
    return images;
}

Subgroup subgroup_from_json(const PermGroup& parent, const Json& j) {
    const Json* gens = nullptr;
    if (j.is_object()) {
        if (j.contains("degree") &&
            (!j["degree"].is_number_unsigned() ||
             j["degree"].get<std::size_t>() != parent.degree)) {
            throw InputError("subgroup degree must match the parent group");
        }
        if (!j.contains("generators")) throw InputError("a subgroup needs \"generators\"");
        gens = &j["generators"];
    } else if (j.is_array()) {
        gens = &j;
    } else {
        throw InputError("a subgroup must be an object or a generator array");
    }
    return subgroup_from_generators(parent, generators_from_json(*gens, parent.degree));
}

Json partition_to_json(const std::vector<std::vector<Perm>>& blocks) {
    Json j = Json::array();
    for (const auto& block : blocks) {
        Json b = Json::array();
        for (const Perm& p : block) b.push_back(perm_to_json(p));
        j.push_back(std::move(b));
    }
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw InputError("rationals must be exact: use \"p/q\" strings or integers");
}

LogAffineDiffeo log_affine_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("s")) {
        throw InputError("a family element needs \"alpha\" and \"s\"");
    }
    return make_log_affine(rational_from_json(j["alpha"]), rational_from_json(j["s"]));
}

Json log_affine_to_json(const LogAffineDiffeo& f) {
    Json j = Json::object();
    j["alpha"] = format_rational(f.alpha);
    j["s"] = format_rational(f.s);
    return j;
}

ChartRepresentation chart_rep_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("delta")) {
        throw InputError("a chart representation needs \"a\", \"b\", and \"delta\"");
    }
    if (!j["delta"].is_number_integer()) throw InputError("\"delta\" must be 1 or -1");
    const int delta = j["delta"].get<int>();
    if (delta != 1 && delta != -1) throw InputError("\"delta\" must be 1 or -1");
    return ChartRepresentation{log_affine_from_json(j["a"]), log_affine_from_json(j["b"]),
                               delta};
}

Json chart_rep_to_json(const ChartRepresentation& rep) {
    Json j = Json::object();
    j["a"] = log_affine_to_json(rep.a);
    j["b"] = log_affine_to_json(rep.b);
    j["delta"] = rep.delta;
    return j;
}

Json classification_to_json(const ClassificationVerdict& verdict) {
    Json j = Json::object();
    j["verdict"] = to_string(verdict.verdict);
    j["witness"] = verdict.witness ? chart_rep_to_json(*verdict.witness) : Json(nullptr);
    return j;
}

Json wreath_report_to_json(const WreathAxiomReport& report) {
    Json j = Json::object();
    j["identity"] = report.identity;
    j["assoc_pp"] = report.assoc_pp;
    j["assoc_pm"] = report.assoc_pm;
    j["assoc_mp"] = report.assoc_mp;
    j["assoc_mm"] = report.assoc_mm;
    return j;
}

Json probe_report_to_json(const ProbeReport& report) {
    Json j = Json::object();
    j["verdict"] = to_string(report.verdict);
    j["ratios"] = report.ratios;
    j["slope"] = report.slope;
    j["ratio_min"] = report.ratio_min;
    j["ratio_max"] = report.ratio_max;
    j["decades"] = report.decades;
    j["monotone_decades"] = report.monotone_decades;
    return j;
}

Json span_report_to_json(const SpanCosetReport& report) {
    Json j = Json::object();
    Json plain = Json::object();
    plain["matches"] = report.plain_matches;
    plain["cosets"] = partition_to_json(report.plain_cosets.blocks);
    plain["atlas_classes"] = partition_to_json(report.plain_classes);
    j["plain"] = std::move(plain);
    Json pm = Json::object();
    pm["matches"] = report.pm_matches;
    pm["cosets"] = partition_to_json(report.pm_cosets.blocks);
    pm["atlas_classes"] = partition_to_json(report.pm_classes);
    j["pm"] = std::move(pm);
    return j;
}

} // namespace branchline
