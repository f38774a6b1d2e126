#pragma once

#include <boost/dynamic_bitset.hpp>
#include <memory>
#include <string>
#include <vector>

#include "iscover/objective.hpp"
#include "iscover/pairset.hpp"
#include "iscover/rational.hpp"

#include "json.hpp"

namespace iscover {

using HypSet = boost::dynamic_bitset<>;

// The question-response structure: hypothesis, query, and response counts
// plus the valid-response map q(h). Immutable after construction and shared
// between an Instance and the objectives that need consistency information
// (e.g. the eliminated-hypotheses count).
class QuerySpace {
public:
    // valid[q][h] lists the responses of q consistent with h. Ids must be in
    // range; empty sets are representable so validate_instance can report
    // them as violations.
    QuerySpace(int hypotheses, int queries, int responses,
               std::vector<std::vector<std::vector<ResponseId>>> valid);

    int hypothesis_count() const { return hypotheses_; }
    int query_count() const { return queries_; }
    int response_count() const { return responses_; }

    const std::vector<ResponseId>& valid_responses(QueryId q, HypothesisId h) const {
        return valid_[q][h];
    }
    bool consistent(QueryId q, ResponseId r, HypothesisId h) const {
        return consistent_[q][r].test(h);
    }
    // Hypotheses for which r is a valid response to q.
    const HypSet& consistent_mask(QueryId q, ResponseId r) const { return consistent_[q][r]; }
    // Union of valid responses over all hypotheses, ascending.
    const std::vector<ResponseId>& response_domain(QueryId q) const { return domain_[q]; }

    HypSet full_version() const { return HypSet(hypotheses_).set(); }

    // { h : forall (q, r) in s, r in q(h) }. Throws malformed_pair_error on
    // out-of-range ids.
    HypSet version_space(const PairSet& s) const;

    void check_pair(QueryId q, ResponseId r) const;

private:
    int hypotheses_;
    int queries_;
    int responses_;
    std::vector<std::vector<std::vector<ResponseId>>> valid_;  // [q][h]
    std::vector<std::vector<HypSet>> consistent_;               // [q][r]
    std::vector<std::vector<ResponseId>> domain_;               // [q]
};

struct Instance {
    std::shared_ptr<const QuerySpace> space;
    std::vector<Rational> cost;            // per query, strictly positive
    std::vector<ObjectivePtr> objectives;  // per hypothesis
    long long alpha = 1;

    // Serializable description of the objectives (the tagged union used in
    // the instance JSON); null for ad-hoc objectives.
    std::shared_ptr<const nlohmann::json> objective_spec;

    const QuerySpace& qs() const { return *space; }
    int hypothesis_count() const { return space->hypothesis_count(); }
    int query_count() const { return space->query_count(); }
    int response_count() const { return space->response_count(); }
};

struct ValidateOptions {
    // Exhaustively check each objective for monotonicity and submodularity
    // (exponential in |Q|x|R|); objectives with a constant offset at the
    // empty set are checked with the offset removed.
    bool check_objectives = false;
    int ground_limit = 12;
};

// Structural invariant check; returns one description per violation.
std::vector<std::string> validate_instance(const Instance& inst,
                                           const ValidateOptions& options = {});

// Sorted hypothesis ids consistent with s.
std::vector<HypothesisId> version_space(const Instance& inst, const PairSet& s);

}  // namespace iscover
