#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iscover/instance.hpp"

namespace iscover {

// Ordered record of a run; repeats are recorded (and paid for) each time.
struct Transcript {
    std::vector<QRPair> steps;
    Rational total_cost;
};

// A question-asking strategy. next() returns the query to ask, or nullopt
// to stop. Policies hold per-run state; use one object per run.
class Policy {
public:
    virtual ~Policy() = default;
    virtual std::optional<QueryId> next(const Instance& inst, const PairSet& s,
                                        const Transcript& transcript) = 0;
};

// Responder. Consistent oracles with target h* only ever answer within
// valid_responses(q, h*); arbitrary tables may be inconsistent with every h.
class Oracle {
public:
    virtual ~Oracle() = default;
    virtual ResponseId respond(const Instance& inst, QueryId q, const PairSet& s) = 0;
};

// Ask/answer/insert loop until the policy stops. Throws protocol_error on
// out-of-range queries or responses and nontermination_error past the step
// limit; policy infeasibility signals propagate.
Transcript run_policy(const Instance& inst, Policy& policy, Oracle& oracle, int step_limit);

// Generous default step limit: greedy-style policies strictly increase the
// scaled composite each round, so alpha * |H| bounds their iterations.
int default_step_limit(const Instance& inst);

}  // namespace iscover
