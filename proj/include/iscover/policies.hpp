#pragma once

#include <memory>
#include <string>
#include <vector>

#include "iscover/run.hpp"

namespace iscover {

struct WorstCaseGain {
    long long scaled_gain = 0;  // min over surviving h and r in q(h) of the composite gain
    Rational cost;
};

// Worst-case scaled composite gain of asking q at s. Zero when the version
// space is empty. Throws parameter_error on unknown q.
WorstCaseGain worst_case_gain(const Instance& inst, const PairSet& s, QueryId q);

// Query selected by the worst-case greedy rule, nullopt when the stopping
// condition already holds. Throws infeasible_error when no query has a
// strictly positive worst-case gain while unsatisfied.
std::optional<QueryId> greedy_choice(const Instance& inst, const PairSet& s);

// Worst Case Greedy: maximizes worst-case composite gain per unit cost,
// stops exactly when the composite threshold is reached. Ties break to the
// smallest query id (as everywhere below).
std::unique_ptr<Policy> greedy_policy(const Instance& inst);

// Maximizes the worst-case gain of the per-hypothesis objectives themselves
// over queries not asked before; stops when min over surviving h of F_h
// reaches alpha.
std::unique_ptr<Policy> naive_greedy_policy(const Instance& inst);

// Identify-first baseline: greedy worst-case hypothesis elimination until a
// single hypothesis survives, then greedy set cover on its objective.
std::unique_ptr<Policy> learn_then_cover_policy(const Instance& inst);

// Feedback-ignoring baseline: a fixed query sequence planned against
// worst-case response assignments, replayed verbatim.
std::unique_ptr<Policy> cover_all_policy(const Instance& inst);

// The precomputed cover-all sequence (exposed for inspection and tests).
std::vector<QueryId> cover_all_plan(const Instance& inst);

// CLI names: "greedy", "naive-greedy", "learn-then-cover", "cover-all".
std::unique_ptr<Policy> make_policy(const std::string& name, const Instance& inst);

}  // namespace iscover
