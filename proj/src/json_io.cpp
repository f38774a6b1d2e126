#include "iscover/json_io.hpp"

#include <fstream>

#include "iscover/composite.hpp"
#include "iscover/errors.hpp"

namespace iscover {

namespace {

nlohmann::json rational_json(const Rational& r) { return {r.num(), r.den()}; }

Rational rational_from(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw parse_error(std::string(what) + ": expected [numerator, denominator]");
    return Rational(j[0].get<long long>(), j[1].get<long long>());
}

std::vector<std::vector<PairWeight>> tables_from(const nlohmann::json& j, int hypotheses) {
    if (!j.is_array() || static_cast<int>(j.size()) != hypotheses)
        throw parse_error("objective tables: expected one weight table per hypothesis");
    std::vector<std::vector<PairWeight>> tables;
    for (const auto& rows : j) {
        std::vector<PairWeight> table;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != 3)
                throw parse_error("objective tables: expected [query, response, weight] rows");
            table.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<long long>()});
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

std::vector<ObjectivePtr> objectives_from(const nlohmann::json& spec, const Instance& inst) {
    const int h_count = inst.hypothesis_count();
    if (!spec.is_object() || !spec.contains("type"))
        throw parse_error("objective: expected a tagged object");
    const std::string type = spec["type"].get<std::string>();

    if (type == "elim_count") {
        return std::vector<ObjectivePtr>(h_count, elim_count_objective(inst));
    }
    if (type == "modular_table" || type == "max_coverage") {
        auto tables = tables_from(spec.at("tables"), h_count);
        std::vector<ObjectivePtr> out;
        for (auto& t : tables)
            out.push_back(type == "modular_table" ? modular_table_objective(std::move(t))
                                                  : max_coverage_objective(std::move(t)));
        return out;
    }
    if (type == "approx_learning") {
        ApproxLearningParams params;
        params.data_points = spec.at("points").get<int>();
        params.kappa = spec.at("kappa").get<int>();
        params.predictions = spec.at("predictions").get<std::vector<std::vector<int>>>();
        std::vector<ObjectivePtr> out;
        for (HypothesisId h = 0; h < h_count; ++h)
            out.push_back(approx_learning_objective(inst, params, h));
        return out;
    }
    if (type == "dominating_set") {
        const auto& gj = spec.at("graph");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : gj.at("edges")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        Graph g = make_graph(gj.at("nodes").get<int>(), edges);
        auto groups = spec.at("groups").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(groups.size()) != h_count)
            throw parse_error("dominating_set objective: one group per hypothesis required");
        std::vector<int> query_node;
        if (spec.contains("query_node"))
            query_node = spec["query_node"].get<std::vector<int>>();
        else
            for (int v = 0; v < g.node_count; ++v) query_node.push_back(v);
        std::vector<ObjectivePtr> out;
        for (const auto& group : groups)
            out.push_back(dominating_set_objective(g, group, query_node));
        return out;
    }
    if (type == "truncated") {
        long long cap = spec.at("cap").get<long long>();
        auto inner = objectives_from(spec.at("inner"), inst);
        for (auto& f : inner) f = truncate(std::move(f), cap);
        return inner;
    }
    if (type == "sum") {
        std::vector<std::vector<ObjectivePtr>> parts;
        for (const auto& part : spec.at("parts")) parts.push_back(objectives_from(part, inst));
        std::vector<ObjectivePtr> out;
        for (HypothesisId h = 0; h < h_count; ++h) {
            std::vector<ObjectivePtr> per_h;
            for (const auto& part : parts) per_h.push_back(part[h]);
            out.push_back(sum_objective(std::move(per_h)));
        }
        return out;
    }
    throw parse_error("objective: unknown construction '" + type + "'");
}

}  // namespace

nlohmann::json instance_to_json(const Instance& inst) {
    if (!inst.objective_spec)
        throw parameter_error("instance_to_json: objectives have no serializable description");
    const QuerySpace& qs = inst.qs();

    nlohmann::json queries = nlohmann::json::array();
    for (QueryId q = 0; q < qs.query_count(); ++q)
        queries.push_back({{"id", q}, {"cost", rational_json(inst.cost[q])}});

    nlohmann::json valid = nlohmann::json::array();
    for (QueryId q = 0; q < qs.query_count(); ++q)
        for (HypothesisId h = 0; h < qs.hypothesis_count(); ++h)
            valid.push_back({q, h, qs.valid_responses(q, h)});

    return {
        {"hypotheses", qs.hypothesis_count()},
        {"queries", std::move(queries)},
        {"responses", qs.response_count()},
        {"valid", std::move(valid)},
        {"alpha", inst.alpha},
        {"objective", *inst.objective_spec},
    };
}

Instance instance_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("instance: expected a JSON object");
    const int h_count = j.at("hypotheses").get<int>();
    const int r_count = j.at("responses").get<int>();
    const auto& queries = j.at("queries");
    const int q_count = static_cast<int>(queries.size());

    std::vector<Rational> cost(q_count);
    std::vector<bool> seen(q_count, false);
    for (const auto& entry : queries) {
        int id = entry.at("id").get<int>();
        if (id < 0 || id >= q_count || seen[id])
            throw parse_error("instance: query ids must be 0..n-1 without repeats");
        seen[id] = true;
        cost[id] = rational_from(entry.at("cost"), "query cost");
    }

    std::vector<std::vector<std::vector<ResponseId>>> valid(
        q_count, std::vector<std::vector<ResponseId>>(h_count));
    for (const auto& row : j.at("valid")) {
        if (!row.is_array() || row.size() != 3)
            throw parse_error("instance: valid entries must be [q, h, [responses]]");
        int q = row[0].get<int>();
        int h = row[1].get<int>();
        if (q < 0 || q >= q_count || h < 0 || h >= h_count)
            throw parse_error("instance: valid entry references unknown ids");
        valid[q][h] = row[2].get<std::vector<ResponseId>>();
    }

    Instance inst;
    inst.space = std::make_shared<QuerySpace>(h_count, q_count, r_count, std::move(valid));
    inst.cost = std::move(cost);
    inst.alpha = j.at("alpha").get<long long>();
    inst.objective_spec = std::make_shared<const nlohmann::json>(j.at("objective"));
    inst.objectives = objectives_from(*inst.objective_spec, inst);
    return inst;
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open instance file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    return instance_from_json(j);
}

void save_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open output file: " + path);
    out << instance_to_json(inst).dump(2) << "\n";
}

nlohmann::json transcript_to_json(const Instance& inst, const Transcript& t) {
    PairSet s;
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& [q, r] : t.steps) {
        steps.push_back({q, r});
        s.insert(q, r);
    }
    return {
        {"steps", std::move(steps)},
        {"query_count", t.steps.size()},
        {"total_cost", rational_json(t.total_cost)},
        {"final_version_space", version_space(inst, s)},
        {"satisfied", f_bar_satisfied(inst, s)},
    };
}

std::vector<ResponseId> table_from_json(const nlohmann::json& j, int query_count) {
    if (!j.is_object()) throw parse_error("answer table: expected {\"query\": response, ...}");
    std::vector<ResponseId> table(query_count, -1);
    for (const auto& [key, value] : j.items()) {
        int q;
        try {
            q = std::stoi(key);
        } catch (...) {
            throw parse_error("answer table: non-integer query key '" + key + "'");
        }
        if (q < 0 || q >= query_count)
            throw parse_error("answer table: query " + key + " out of range");
        table[q] = value.get<ResponseId>();
    }
    for (int q = 0; q < query_count; ++q)
        if (table[q] < 0)
            throw parse_error("answer table: missing entry for query " + std::to_string(q));
    return table;
}

std::vector<ResponseId> load_table_file(const std::string& path, int query_count) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open answer table file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    return table_from_json(j, query_count);
}

nlohmann::json class_to_json(const HypothesisClass& hc) { return nlohmann::json(hc.groups); }

HypothesisClass class_from_json(const nlohmann::json& j) {
    HypothesisClass hc;
    hc.groups = j.get<std::vector<std::vector<int>>>();
    for (const auto& group : hc.groups)
        if (group.empty()) throw parse_error("hypothesis class: empty group");
    return hc;
}

nlohmann::json bound_report_to_json(const BoundReport& report) {
    auto opt = [](const std::optional<Rational>& r) -> nlohmann::json {
        if (!r) return "inf";
        return rational_json(*r);
    };
    return {
        {"greedy_cost", rational_json(report.greedy_cost)},
        {"gcc", opt(report.gcc)},
        {"optimal_adaptive_cost", opt(report.optimal_adaptive_cost)},
        {"optimal_nonadaptive_cost", opt(report.optimal_nonadaptive_cost)},
        {"bound_value", report.bound_value},
        {"checks",
         {
             {"gcc_le_adaptive", report.gcc_le_adaptive},
             {"greedy_within_bound", report.greedy_within_bound},
             {"adaptive_le_nonadaptive", report.adaptive_le_nonadaptive},
             {"per_step_progress", report.per_step_progress},
         }},
        {"all_ok", report.all_ok()},
    };
}

}  // namespace iscover
