#pragma once

// Shared test scaffolding: compact instance builders, random instance
// families, and independent reference computations used as oracles.

#include <algorithm>
#include <set>
#include <vector>

#include "iscover/composite.hpp"
#include "iscover/graph.hpp"
#include "iscover/instance.hpp"
#include "iscover/rng.hpp"

namespace iscover::testsupport {

// Instance with explicit valid-response sets and per-hypothesis objectives.
inline Instance make_instance(int hypotheses, int queries, int responses,
                              std::vector<std::vector<std::vector<ResponseId>>> valid,
                              std::vector<Rational> costs, std::vector<ObjectivePtr> objectives,
                              long long alpha) {
    Instance inst;
    inst.space = std::make_shared<QuerySpace>(hypotheses, queries, responses, std::move(valid));
    inst.cost = std::move(costs);
    inst.objectives = std::move(objectives);
    inst.alpha = alpha;
    return inst;
}

// All (q, h) pairs share the single response 0.
inline std::vector<std::vector<std::vector<ResponseId>>> one_response(int hypotheses, int queries) {
    return std::vector<std::vector<std::vector<ResponseId>>>(
        queries, std::vector<std::vector<ResponseId>>(hypotheses, std::vector<ResponseId>{0}));
}

struct RandomInstanceOptions {
    int max_hypotheses = 4;
    int max_queries = 4;
    int max_responses = 2;
    int max_ground = 8;  // cap on |Q| * |R|
    long long max_alpha = 3;
    // Add a unit modular floor to every objective and keep alpha <= |Q| so
    // that every oracle table admits a cover (finite GCC by construction).
    bool ensure_feasible = false;
};

// Random instance whose objectives are integral, normalized, monotone, and
// submodular by construction: sums of modular tables, weighted coverage
// atoms, and truncations.
inline Instance random_instance(Rng& rng, const RandomInstanceOptions& opt = {}) {
    const int responses = rng.int_in(1, opt.max_responses);
    int max_q = std::min(opt.max_queries, std::max(1, opt.max_ground / responses));
    const int queries = rng.int_in(1, max_q);
    const int hypotheses = rng.int_in(1, opt.max_hypotheses);
    long long alpha = rng.int_in(1, static_cast<int>(opt.max_alpha));
    if (opt.ensure_feasible) alpha = std::min<long long>(alpha, queries);

    std::vector<std::vector<std::vector<ResponseId>>> valid(
        queries, std::vector<std::vector<ResponseId>>(hypotheses));
    for (int q = 0; q < queries; ++q)
        for (int h = 0; h < hypotheses; ++h) {
            std::vector<ResponseId> rs;
            for (int r = 0; r < responses; ++r)
                if (rng.chance(0.6)) rs.push_back(r);
            if (rs.empty()) rs.push_back(static_cast<ResponseId>(rng.below(responses)));
            valid[q][h] = std::move(rs);
        }

    std::vector<Rational> costs;
    for (int q = 0; q < queries; ++q) costs.emplace_back(rng.int_in(1, 6), rng.int_in(1, 3));

    std::vector<ObjectivePtr> objectives;
    for (int h = 0; h < hypotheses; ++h) {
        std::vector<ObjectivePtr> parts;
        std::vector<PairWeight> modular;
        for (int q = 0; q < queries; ++q)
            for (int r = 0; r < responses; ++r) {
                long long floor = opt.ensure_feasible ? 1 : 0;
                long long w = floor + rng.int_in(0, 2);
                if (w > 0) modular.push_back({q, r, w});
            }
        if (!modular.empty()) parts.push_back(modular_table_objective(modular));
        const int atoms = rng.int_in(0, 2);
        for (int a = 0; a < atoms; ++a) {
            std::vector<PairWeight> coverage;
            for (int q = 0; q < queries; ++q)
                for (int r = 0; r < responses; ++r)
                    if (rng.chance(0.5)) coverage.push_back({q, r, rng.int_in(1, 3)});
            if (!coverage.empty()) parts.push_back(max_coverage_objective(coverage));
        }
        if (parts.empty()) parts.push_back(modular_table_objective({{0, 0, 1}}));
        ObjectivePtr f = sum_objective(std::move(parts));
        if (rng.chance(0.3)) f = truncate(f, std::max(alpha, static_cast<long long>(rng.int_in(1, 6))));
        objectives.push_back(std::move(f));
    }

    return make_instance(hypotheses, queries, responses, std::move(valid), std::move(costs),
                         std::move(objectives), alpha);
}

inline std::vector<QRPair> full_ground(const Instance& inst) {
    std::vector<QRPair> ground;
    for (QueryId q = 0; q < inst.query_count(); ++q)
        for (ResponseId r = 0; r < inst.response_count(); ++r) ground.push_back({q, r});
    return ground;
}

// Reference check used against f_bar_satisfied: every surviving hypothesis
// meets the threshold directly.
inline bool directly_satisfied(const Instance& inst, const PairSet& s) {
    for (HypothesisId h : version_space(inst, s))
        if (inst.objectives[h]->value(s) < inst.alpha) return false;
    return true;
}

// Classical greedy set cover (most new items per unit cost, smallest index
// on ties): the reference behavior for the single-hypothesis reduction.
inline std::vector<int> reference_greedy_set_cover(const std::vector<std::vector<int>>& sets,
                                                   const std::vector<Rational>& costs) {
    std::set<int> remaining;
    for (const auto& s : sets) remaining.insert(s.begin(), s.end());
    std::vector<int> picked;
    std::vector<bool> used(sets.size(), false);
    while (!remaining.empty()) {
        int best = -1;
        long long best_new = 0;
        for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
            if (used[i]) continue;
            long long fresh = 0;
            for (int item : sets[i]) fresh += remaining.count(item);
            if (fresh == 0) continue;
            // fresh / cost > best_new / cost_best by cross-multiplication
            if (best < 0 || static_cast<__int128>(fresh) * costs[i].den() * costs[best].num() >
                                static_cast<__int128>(best_new) * costs[best].den() * costs[i].num()) {
                best = i;
                best_new = fresh;
            }
        }
        if (best < 0) return picked;  // uncoverable remainder
        used[best] = true;
        picked.push_back(best);
        for (int item : sets[best]) remaining.erase(item);
    }
    return picked;
}

// Two planted communities with dense intra-community and sparse cross edges.
inline Graph community_graph(int per_side, double p_in, double p_out, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    const int n = 2 * per_side;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool same = (u < per_side) == (v < per_side);
            if (rng.chance(same ? p_in : p_out)) edges.emplace_back(u, v);
        }
    // Ring inside each community keeps them connected.
    for (int side = 0; side < 2; ++side)
        for (int i = 0; i < per_side; ++i)
            edges.emplace_back(side * per_side + i, side * per_side + (i + 1) % per_side);
    return make_graph(n, edges);
}

}  // namespace iscover::testsupport
