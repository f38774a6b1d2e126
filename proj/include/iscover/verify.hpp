#pragma once

#include <optional>

#include "iscover/instance.hpp"
#include "iscover/policies.hpp"
#include "iscover/submodular_check.hpp"

namespace iscover {

struct BruteLimits {
    int max_queries = 8;
    int max_domain = 3;              // per-query response domain size
    long long max_tables = 1 << 20;  // oracle tables enumerated for GCC
    int max_nonadaptive_queries = 16;
    std::size_t max_states = 1 << 22;  // memoized game states
};

// General Cover Cost: worst case over arbitrary answer tables of the
// cheapest query set reaching the composite threshold under that table.
// nullopt means infinite (some table admits no cover).
std::optional<Rational> brute_gcc(const Instance& inst, const BruteLimits& limits = {});

// Exact minimax worst-case cost over adaptive strategies (C*); nullopt when
// no correct strategy exists.
std::optional<Rational> brute_optimal_adaptive_cost(const Instance& inst,
                                                    const BruteLimits& limits = {});

// Cheapest query set whose every response assignment reaches the threshold;
// nullopt when none does.
std::optional<Rational> brute_optimal_nonadaptive_cost(const Instance& inst,
                                                       const BruteLimits& limits = {});

// Worst-case cost of the greedy policy itself: max over adversary response
// strategies, by exhaustive branching on the greedy run.
std::optional<Rational> greedy_worst_case_cost(const Instance& inst,
                                               const BruteLimits& limits = {});

struct BoundReport {
    Rational greedy_cost;  // worst over targets, greedy vs the per-step adversary
    std::optional<Rational> gcc;
    std::optional<Rational> optimal_adaptive_cost;
    std::optional<Rational> optimal_nonadaptive_cost;
    double bound_value = 0;  // GCC * (1 + ln(alpha * |H|))

    bool gcc_le_adaptive = false;         // GCC <= C*
    bool greedy_within_bound = false;     // greedy cost <= GCC * (1 + ln(alpha |H|))
    bool adaptive_le_nonadaptive = false; // C* <= non-adaptive optimum
    bool per_step_progress = false;       // every greedy step's guaranteed-gain inequality

    bool all_ok() const {
        return gcc_le_adaptive && greedy_within_bound && adaptive_le_nonadaptive &&
               per_step_progress;
    }
};

// Runs greedy against the adversarial oracle for every target, computes the
// brute-force quantities, and checks each audited inequality exactly.
BoundReport audit_bounds(const Instance& inst, const BruteLimits& limits = {});

}  // namespace iscover
