#include "iscover/run.hpp"

#include <algorithm>

#include "iscover/errors.hpp"

namespace iscover {

int default_step_limit(const Instance& inst) {
    long long bound = inst.alpha * inst.hypothesis_count() +
                      static_cast<long long>(inst.query_count()) * inst.response_count() + 16;
    return static_cast<int>(std::min<long long>(bound, 1'000'000));
}

Transcript run_policy(const Instance& inst, Policy& policy, Oracle& oracle, int step_limit) {
    if (step_limit < 1) throw parameter_error("run_policy: step limit must be positive");

    Transcript transcript;
    PairSet s;
    for (;;) {
        std::optional<QueryId> q = policy.next(inst, s, transcript);
        if (!q) return transcript;
        if (static_cast<int>(transcript.steps.size()) >= step_limit)
            throw nontermination_error("run_policy: step limit of " + std::to_string(step_limit) +
                                       " exceeded");
        if (*q < 0 || *q >= inst.query_count())
            throw protocol_error("policy emitted unknown query id " + std::to_string(*q));

        ResponseId r = oracle.respond(inst, *q, s);
        if (r < 0 || r >= inst.response_count())
            throw protocol_error("oracle emitted unknown response id " + std::to_string(r));

        transcript.steps.emplace_back(*q, r);
        transcript.total_cost += inst.cost[*q];
        s.insert(*q, r);
    }
}

}  // namespace iscover
