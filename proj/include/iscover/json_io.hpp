#pragma once

#include <string>

#include "iscover/instance.hpp"
#include "iscover/netapp.hpp"
#include "iscover/run.hpp"
#include "iscover/verify.hpp"

namespace iscover {

// Instance wire format: {"hypotheses", "queries": [{"id", "cost": [n, d]}],
// "responses", "valid": [[q, h, [r...]]...], "alpha", "objective": <tagged union>}.
// Objective tags: elim_count, modular_table, max_coverage, approx_learning,
// dominating_set, truncated, sum.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& inst, const std::string& path);

nlohmann::json transcript_to_json(const Instance& inst, const Transcript& t);

// Answer table for the table oracle: {"0": 1, "3": 0, ...}, total over Q.
std::vector<ResponseId> table_from_json(const nlohmann::json& j, int query_count);
std::vector<ResponseId> load_table_file(const std::string& path, int query_count);

nlohmann::json class_to_json(const HypothesisClass& hc);
HypothesisClass class_from_json(const nlohmann::json& j);

nlohmann::json bound_report_to_json(const BoundReport& report);

}  // namespace iscover
