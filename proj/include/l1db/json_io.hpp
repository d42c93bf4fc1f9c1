#pragma once

#include <json.hpp>

#include "l1db/family.hpp"
#include "l1db/geometry.hpp"
#include "l1db/kkt.hpp"
#include "l1db/oracle.hpp"
#include "l1db/reduce.hpp"

namespace l1db::jsonio {

// Polygons travel as {"vertices": [[x, y], ...]} in counterclockwise order;
// a pair as {"first": ..., "second": ...}; a configuration as
// {"variant": "kissing"|"embedded"|"general", "params": {...}}.
// Parsers throw input_error on malformed documents.

nlohmann::json polygon_json(const RectilinearPolygon& poly);
RectilinearPolygon polygon_from_json(const nlohmann::json& j);

nlohmann::json pair_json(const BubblePair& pair);
BubblePair pair_from_json(const nlohmann::json& j);

nlohmann::json config_json(const FamilyConfig& cfg);
FamilyConfig config_from_json(const nlohmann::json& j);

nlohmann::json assignment_json(const VolumeAssignment& asg);
nlohmann::json branch_solution_json(const kkt::BranchSolution& sol);
nlohmann::json gamma_result_json(const kkt::GammaResult& result);
nlohmann::json reduction_json(const Reduction& red);
nlohmann::json search_report_json(const oracle::SearchReport& rep);
nlohmann::json lower_bound_report_json(const oracle::LowerBoundReport& rep);
nlohmann::json kink_report_json(const oracle::KinkReport& rep);
nlohmann::json suite_result_json(const oracle::SuiteResult& res);

} // namespace l1db::jsonio
