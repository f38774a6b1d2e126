#pragma once

#include <cstdint>
#include <optional>

#include "iscover/graph.hpp"
#include "iscover/instance.hpp"

namespace iscover {

// Node groups, one per hypothesis; groups may overlap.
struct HypothesisClass {
    std::vector<std::vector<int>> groups;  // sorted node ids, each nonempty

    int size() const { return static_cast<int>(groups.size()); }
};

// Advertising-coverage objective: counts group members that received an ad
// or have a neighbor that did, plus the constant |V \ group|. Reaches the
// node count exactly when every group member is dominated. Depends only on
// which nodes were asked, never on responses; the value on the empty set is
// the constant shift, not 0.
ObjectivePtr dominating_set_objective(const Graph& g, std::vector<int> group,
                                      std::vector<int> query_node);

// Seeded multi-source BFS region growing standing in for a heavyweight
// partitioner: k disjoint nonempty clusters covering every node, one seed
// per connected component while they last. Deterministic per seed.
HypothesisClass partition_clusters(const Graph& g, int k, std::uint64_t seed);

// Union of partitions at each requested cluster count (overlapping groups).
HypothesisClass gen_clusters_class(const Graph& g, const std::vector<int>& sizes,
                                   std::uint64_t seed);

// Appends m near-duplicates of the target group, each missing one random
// member (repeats across variants allowed).
HypothesisClass gen_noisy_variants(const HypothesisClass& base, HypothesisId target, int m,
                                   std::uint64_t seed);

// Random geodesic balls: all nodes within the given shortest-path radius of
// seeded-uniform random centers.
HypothesisClass gen_balls(const Graph& g, int count, int radius, std::uint64_t seed);

// Partition into k clusters, then widen each by its immediate neighbors.
HypothesisClass gen_expanded_clusters(const Graph& g, int k, std::uint64_t seed);

// One query per node with a binary membership response (singleton valid
// sets), the coverage objective per group, and alpha = |V|. Unit costs
// unless given.
Instance build_dominating_instance(const Graph& g, const HypothesisClass& hc,
                                   std::optional<std::vector<Rational>> costs = std::nullopt);

}  // namespace iscover
