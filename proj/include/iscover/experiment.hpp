#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iscover/netapp.hpp"

namespace iscover {

// Hypothesis-class recipe for experiments, parsed from CLI strings:
//   clusters:<k1,k2,...>        union of partitions at each cluster count
//   noisy-clusters:<k>,<m>      k-partition plus m variants of the per-trial
//                               target (class rebuilt around each target)
//   balls:<count>,<radius>      random geodesic balls
//   expanded-clusters:<k>       partition widened by immediate neighbors
struct ClassSpec {
    enum class Kind { clusters, noisy_clusters, balls, expanded_clusters };

    Kind kind = Kind::clusters;
    std::vector<int> sizes;  // clusters
    int k = 0;               // noisy_clusters / expanded_clusters
    int variants = 0;        // noisy_clusters
    int count = 0;           // balls
    int radius = 0;          // balls

    static ClassSpec parse(const std::string& text);
    std::string str() const;
};

struct ExperimentResult {
    std::string dataset;
    std::string class_name;
    std::vector<std::string> policies;
    int trials = 0;
    std::vector<std::vector<long long>> query_counts;  // [policy][trial]

    double mean(std::size_t policy) const;
    double stddev(std::size_t policy) const;  // sample standard deviation
};

// Per trial: draw the target (seeded), run every policy against the random
// consistent oracle with the same per-trial seed, and record query counts.
// Trial t uses seed mix_seed(seed, t); targets draw from mix_seed(seed,
// 2^32 + t).
ExperimentResult run_experiment(const Graph& g, const ClassSpec& spec,
                                const std::vector<std::string>& policies, int trials,
                                std::uint64_t seed, const std::string& dataset_name);

// Deterministic CSV: dataset, class, policy, trials, mean, std, then paired
// t columns against every policy.
std::string experiment_csv(const ExperimentResult& result);

}  // namespace iscover
