#pragma once

#include "iscover/netapp.hpp"

namespace iscover {

// Two hypotheses whose own objectives gain nothing from the two cheap
// queries that jointly satisfy both: the gap instance for the naive
// per-hypothesis greedy rule. |Q| = alpha + 2, single response.
Instance gen_naive_greedy_counterexample(long long alpha, Rational cheap, Rational expensive);

// n hypotheses that are expensive to tell apart while one cheap query
// satisfies every objective: the gap instance for identify-first policies.
Instance gen_identify_hard_instance(int n, Rational cheap, Rational expensive);

// Threshold-on-a-line identification family: 2^k hypotheses, 2^k queries
// with q_i valid-1 exactly on h_j for j >= i, unit costs, the
// eliminated-count objective, alpha = |H| - 1. Binary search solves it
// adaptively in k queries; non-adaptive strategies need 2^k - 1.
Instance gen_threshold_line(int k);

// Set cover as a single-hypothesis instance: one objective counting covered
// ground items, alpha = ground size.
Instance reduce_set_cover_single_h(const std::vector<std::vector<int>>& sets,
                                   const std::vector<Rational>& costs);

// Set cover as a many-hypothesis instance: one indicator objective per
// ground item, alpha = 1, no informative responses.
Instance reduce_set_cover_multi_h(const std::vector<std::vector<int>>& sets,
                                  const std::vector<Rational>& costs);

// The 15-node example network: four clusters A-D, a probe node v shared by
// A and B, and hub nodes x and w adjacent to all of B and D respectively.
// Optimal adaptive cost 3, optimal non-adaptive cost 4.
struct CartoonExample {
    Graph graph;
    HypothesisClass groups;  // A, B, C, D
    Instance instance;
    // Node ids, in order: a1 a2 a3, b1 b2 b3, c1 c2 c3, d1 d2 d3, v, x, w.
    static constexpr int a1 = 0, b1 = 3, c1 = 6, d1 = 9, v = 12, x = 13, w = 14;
};
CartoonExample gen_cartoon();

}  // namespace iscover
