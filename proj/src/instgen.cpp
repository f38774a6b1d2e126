#include "iscover/instgen.hpp"

#include <algorithm>
#include <set>

#include "iscover/composite.hpp"
#include "iscover/errors.hpp"

namespace iscover {

namespace {

// Every (q, h) maps to the single response 0.
std::vector<std::vector<std::vector<ResponseId>>> single_response_map(int hypotheses, int queries) {
    return std::vector<std::vector<std::vector<ResponseId>>>(
        queries, std::vector<std::vector<ResponseId>>(hypotheses, std::vector<ResponseId>{0}));
}

nlohmann::json table_json(const std::vector<std::vector<PairWeight>>& tables) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& table : tables) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& w : table) rows.push_back({w.query, w.response, w.weight});
        out.push_back(std::move(rows));
    }
    return out;
}

}  // namespace

Instance gen_naive_greedy_counterexample(long long alpha, Rational cheap, Rational expensive) {
    if (alpha < 2) throw parameter_error("gen_naive_greedy_counterexample: alpha must be >= 2");
    if (!cheap.positive() || !(expensive > cheap))
        throw parameter_error("gen_naive_greedy_counterexample: need 0 < cheap < expensive");
    const int queries = static_cast<int>(alpha) + 2;

    Instance inst;
    inst.space = std::make_shared<QuerySpace>(2, queries, 1, single_response_map(2, queries));
    inst.alpha = alpha;
    inst.cost.assign(queries, expensive);
    inst.cost[0] = inst.cost[1] = cheap;

    std::vector<std::vector<PairWeight>> tables(2);
    tables[0].push_back({0, 0, alpha});  // first hypothesis saturated by q0 alone
    tables[1].push_back({1, 0, alpha});  // second by q1 alone
    for (int q = 2; q < queries; ++q) {
        tables[0].push_back({q, 0, 1});
        tables[1].push_back({q, 0, 1});
    }
    for (const auto& t : tables) inst.objectives.push_back(modular_table_objective(t));

    inst.objective_spec = std::make_shared<const nlohmann::json>(
        nlohmann::json{{"type", "modular_table"}, {"tables", table_json(tables)}});
    return inst;
}

Instance gen_identify_hard_instance(int n, Rational cheap, Rational expensive) {
    if (n < 2) throw parameter_error("gen_identify_hard_instance: need at least two hypotheses");
    if (!cheap.positive() || !expensive.positive())
        throw parameter_error("gen_identify_hard_instance: costs must be positive");
    const int queries = n + 1;

    // q_i answers 1 exactly under h_i; the final query answers 0 under all.
    std::vector<std::vector<std::vector<ResponseId>>> valid(
        queries, std::vector<std::vector<ResponseId>>(n));
    for (int q = 0; q < n; ++q)
        for (int h = 0; h < n; ++h) valid[q][h] = {q == h ? 1 : 0};
    for (int h = 0; h < n; ++h) valid[n][h] = {0};

    Instance inst;
    inst.space = std::make_shared<QuerySpace>(n, queries, 2, std::move(valid));
    inst.alpha = 1;
    inst.cost.assign(queries, expensive);
    inst.cost[n] = cheap;

    std::vector<std::vector<PairWeight>> tables(n, {PairWeight{n, 0, 1}});
    for (const auto& t : tables) inst.objectives.push_back(modular_table_objective(t));

    inst.objective_spec = std::make_shared<const nlohmann::json>(
        nlohmann::json{{"type", "modular_table"}, {"tables", table_json(tables)}});
    return inst;
}

Instance gen_threshold_line(int k) {
    if (k < 1) throw parameter_error("gen_threshold_line: k must be >= 1");
    if (k > 20) throw parameter_error("gen_threshold_line: k too large");
    const int n = 1 << k;

    std::vector<std::vector<std::vector<ResponseId>>> valid(
        n, std::vector<std::vector<ResponseId>>(n));
    for (int q = 0; q < n; ++q)
        for (int h = 0; h < n; ++h) valid[q][h] = {q <= h ? 1 : 0};

    Instance inst;
    inst.space = std::make_shared<QuerySpace>(n, n, 2, std::move(valid));
    inst.alpha = n - 1;
    inst.cost.assign(n, Rational(1));
    ObjectivePtr elim = elim_count_objective(inst);
    inst.objectives.assign(n, elim);
    inst.objective_spec =
        std::make_shared<const nlohmann::json>(nlohmann::json{{"type", "elim_count"}});
    return inst;
}

namespace {

std::vector<int> ground_items(const std::vector<std::vector<int>>& sets) {
    std::set<int> items;
    for (const auto& s : sets) {
        if (s.empty()) throw parameter_error("set cover reduction: empty set");
        items.insert(s.begin(), s.end());
    }
    if (items.empty()) throw parameter_error("set cover reduction: empty ground set");
    return {items.begin(), items.end()};
}

std::vector<Rational> checked_costs(std::size_t sets, const std::vector<Rational>& costs) {
    if (costs.size() != sets)
        throw parameter_error("set cover reduction: one cost per set required");
    for (const auto& c : costs)
        if (!c.positive()) throw parameter_error("set cover reduction: costs must be positive");
    return costs;
}

}  // namespace

Instance reduce_set_cover_single_h(const std::vector<std::vector<int>>& sets,
                                   const std::vector<Rational>& costs) {
    const auto items = ground_items(sets);
    const int queries = static_cast<int>(sets.size());

    Instance inst;
    inst.space = std::make_shared<QuerySpace>(1, queries, 1, single_response_map(1, queries));
    inst.alpha = static_cast<long long>(items.size());
    inst.cost = checked_costs(sets.size(), costs);

    // |union of chosen sets| as a sum of per-item coverage indicators.
    std::vector<ObjectivePtr> parts;
    nlohmann::json parts_json = nlohmann::json::array();
    for (int item : items) {
        std::vector<PairWeight> weights;
        for (int q = 0; q < queries; ++q)
            if (std::find(sets[q].begin(), sets[q].end(), item) != sets[q].end())
                weights.push_back({q, 0, 1});
        parts.push_back(max_coverage_objective(weights));
        parts_json.push_back({{"type", "max_coverage"}, {"tables", table_json({weights})}});
    }
    inst.objectives.push_back(sum_objective(std::move(parts)));

    inst.objective_spec = std::make_shared<const nlohmann::json>(
        nlohmann::json{{"type", "sum"}, {"parts", std::move(parts_json)}});
    return inst;
}

Instance reduce_set_cover_multi_h(const std::vector<std::vector<int>>& sets,
                                  const std::vector<Rational>& costs) {
    const auto items = ground_items(sets);
    const int queries = static_cast<int>(sets.size());
    const int h_count = static_cast<int>(items.size());

    Instance inst;
    inst.space =
        std::make_shared<QuerySpace>(h_count, queries, 1, single_response_map(h_count, queries));
    inst.alpha = 1;
    inst.cost = checked_costs(sets.size(), costs);

    std::vector<std::vector<PairWeight>> tables;
    for (int item : items) {
        std::vector<PairWeight> weights;
        for (int q = 0; q < queries; ++q)
            if (std::find(sets[q].begin(), sets[q].end(), item) != sets[q].end())
                weights.push_back({q, 0, 1});
        tables.push_back(weights);
        inst.objectives.push_back(max_coverage_objective(std::move(weights)));
    }

    inst.objective_spec = std::make_shared<const nlohmann::json>(
        nlohmann::json{{"type", "max_coverage"}, {"tables", table_json(tables)}});
    return inst;
}

CartoonExample gen_cartoon() {
    CartoonExample out;
    const int a1 = CartoonExample::a1, b1 = CartoonExample::b1, c1 = CartoonExample::c1,
              d1 = CartoonExample::d1, v = CartoonExample::v, x = CartoonExample::x,
              w = CartoonExample::w;

    out.graph = make_graph(15, {
                                   {a1, a1 + 1},  // a1-a2
                                   {a1, a1 + 2},  // a1-a3
                                   {a1, v},
                                   {x, v},
                                   {x, b1},
                                   {x, b1 + 1},
                                   {x, b1 + 2},
                                   {c1, c1 + 1},
                                   {c1, c1 + 2},
                                   {w, d1},
                                   {w, d1 + 1},
                                   {w, d1 + 2},
                               });
    out.groups.groups = {
        {a1, a1 + 1, a1 + 2, v},  // A
        {b1, b1 + 1, b1 + 2, v},  // B
        {c1, c1 + 1, c1 + 2},     // C
        {d1, d1 + 1, d1 + 2},     // D
    };
    out.instance = build_dominating_instance(out.graph, out.groups);
    return out;
}

}  // namespace iscover
