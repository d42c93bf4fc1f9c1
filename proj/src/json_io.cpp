#include "l1db/json_io.hpp"

#include <string>
#include <vector>

#include "l1db/errors.hpp"

namespace l1db::jsonio {
namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double require_number(const json& j, const char* what) {
    if (!j.is_number())
        throw input_error(std::string(what) + " must be a number");
    return j.get<double>();
}

} // namespace

json polygon_json(const RectilinearPolygon& poly) {
    json verts = json::array();
    for (const Point& p : poly.vertices()) verts.push_back({p.x, p.y});
    return json{{"vertices", std::move(verts)}};
}

RectilinearPolygon polygon_from_json(const json& j) {
    const json& verts = require_field(j, "vertices");
    if (!verts.is_array())
        throw input_error("\"vertices\" must be an array of [x, y] pairs");
    std::vector<Point> pts;
    pts.reserve(verts.size());
    for (const json& v : verts) {
        if (!v.is_array() || v.size() != 2)
            throw input_error("each vertex must be an [x, y] pair");
        pts.push_back({require_number(v[0], "vertex x"),
                       require_number(v[1], "vertex y")});
    }
    return RectilinearPolygon(pts);
}

json pair_json(const BubblePair& pair) {
    return json{{"first", polygon_json(pair.first())},
                {"second", polygon_json(pair.second())}};
}

BubblePair pair_from_json(const json& j) {
    return BubblePair(polygon_from_json(require_field(j, "first")),
                      polygon_from_json(require_field(j, "second")));
}

json config_json(const FamilyConfig& cfg) {
    json params{{"a", cfg.a}, {"b", cfg.b}, {"c", cfg.c}, {"d", cfg.d}};
    const char* variant = "kissing";
    switch (cfg.shape) {
        case FamilyShape::kissing: variant = "kissing"; break;
        case FamilyShape::embedded: variant = "embedded"; break;
        case FamilyShape::general:
            variant = "general";
            params["e"] = cfg.e;
            params["f"] = cfg.f;
            break;
    }
    return json{{"variant", variant}, {"params", std::move(params)}};
}

FamilyConfig config_from_json(const json& j) {
    const std::string variant =
        require_field(j, "variant").get<std::string>();
    const json& params = require_field(j, "params");
    auto p = [&params](const char* key) {
        return require_number(require_field(params, key), key);
    };
    if (variant == "kissing")
        return kissing_config(p("a"), p("b"), p("c"), p("d"));
    if (variant == "embedded")
        return embedded_config(p("a"), p("b"), p("c"), p("d"));
    if (variant == "general")
        return general_config(p("a"), p("b"), p("c"), p("d"), p("e"), p("f"));
    throw input_error("unknown variant \"" + variant + "\"");
}

json assignment_json(const VolumeAssignment& asg) {
    return json{{"beta", asg.beta}, {"gamma", asg.gamma}};
}

json branch_solution_json(const kkt::BranchSolution& sol) {
    json j{{"branch", kkt::branch_name(sol.branch)},
           {"assignment", assignment_json(sol.assignment)},
           {"perimeter", sol.perimeter},
           {"valid", sol.valid}};
    if (sol.config) j["config"] = config_json(*sol.config);
    if (!sol.violated.empty()) j["violated"] = sol.violated;
    if (!sol.note.empty()) j["note"] = sol.note;
    return j;
}

json gamma_result_json(const kkt::GammaResult& result) {
    json mins = json::array();
    for (const kkt::BranchSolution& s : result.minimizers)
        mins.push_back(branch_solution_json(s));
    return json{{"alpha", result.alpha},
                {"perimeter", result.perimeter},
                {"branch_label", result.branch_label},
                {"minimizers", std::move(mins)}};
}

json reduction_json(const Reduction& red) {
    json j{{"containment", containment_name(red.containment.kind)},
           {"second_plays_b", red.containment.second_plays_b},
           {"config", config_json(red.config)},
           {"assignment", assignment_json(red.assignment)},
           {"input_perimeter", red.input_perimeter},
           {"output_perimeter", red.output_perimeter}};
    if (red.containment.kind == Containment::contained)
        j["touching_sides"] = red.containment.touching_sides;
    return j;
}

json search_report_json(const oracle::SearchReport& rep) {
    return json{{"alpha", rep.alpha},
                {"best_config", config_json(rep.best_config)},
                {"best_perimeter", rep.best_perimeter},
                {"analytic_perimeter", rep.analytic_perimeter},
                {"gap", rep.gap},
                {"evaluations", rep.evaluations}};
}

json lower_bound_report_json(const oracle::LowerBoundReport& rep) {
    return json{{"alpha", rep.alpha},
                {"samples", rep.samples},
                {"seed", rep.seed},
                {"violations", rep.violations},
                {"skipped", rep.skipped},
                {"min_gap", rep.min_gap},
                {"messages", rep.messages}};
}

json kink_report_json(const oracle::KinkReport& rep) {
    return json{{"grid_step", rep.grid_step},
                {"fd_step", rep.fd_step},
                {"first_order", rep.first_order},
                {"second_order", rep.second_order}};
}

json suite_result_json(const oracle::SuiteResult& res) {
    return json{{"suite", res.suite},
                {"passed", res.passed},
                {"checks", res.checks},
                {"failures", res.failures}};
}

} // namespace l1db::jsonio
