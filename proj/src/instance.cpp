#include "iscover/instance.hpp"

#include <algorithm>

#include "iscover/errors.hpp"
#include "iscover/submodular_check.hpp"

namespace iscover {

QuerySpace::QuerySpace(int hypotheses, int queries, int responses,
                       std::vector<std::vector<std::vector<ResponseId>>> valid)
    : hypotheses_(hypotheses), queries_(queries), responses_(responses), valid_(std::move(valid)) {
    if (hypotheses_ < 1) throw parameter_error("QuerySpace: need at least one hypothesis");
    if (queries_ < 1) throw parameter_error("QuerySpace: need at least one query");
    if (responses_ < 1) throw parameter_error("QuerySpace: need at least one response");
    if (static_cast<int>(valid_.size()) != queries_)
        throw parameter_error("QuerySpace: valid map must cover every query");
    for (auto& per_query : valid_) {
        if (static_cast<int>(per_query.size()) != hypotheses_)
            throw parameter_error("QuerySpace: valid map must cover every hypothesis");
        for (auto& rs : per_query) {
            std::sort(rs.begin(), rs.end());
            rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
            for (ResponseId r : rs)
                if (r < 0 || r >= responses_)
                    throw parameter_error("QuerySpace: response id out of range");
        }
    }

    consistent_.assign(queries_, std::vector<HypSet>(responses_, HypSet(hypotheses_)));
    domain_.assign(queries_, {});
    for (QueryId q = 0; q < queries_; ++q) {
        for (HypothesisId h = 0; h < hypotheses_; ++h)
            for (ResponseId r : valid_[q][h]) consistent_[q][r].set(h);
        for (ResponseId r = 0; r < responses_; ++r)
            if (consistent_[q][r].any()) domain_[q].push_back(r);
    }
}

void QuerySpace::check_pair(QueryId q, ResponseId r) const {
    if (q < 0 || q >= queries_)
        throw malformed_pair_error("unknown query id " + std::to_string(q));
    if (r < 0 || r >= responses_)
        throw malformed_pair_error("unknown response id " + std::to_string(r));
}

HypSet QuerySpace::version_space(const PairSet& s) const {
    HypSet alive = full_version();
    for (const auto& [q, r] : s) {
        check_pair(q, r);
        alive &= consistent_[q][r];
        if (alive.none()) break;
    }
    return alive;
}

std::vector<HypothesisId> version_space(const Instance& inst, const PairSet& s) {
    HypSet alive = inst.qs().version_space(s);
    std::vector<HypothesisId> out;
    for (auto h = alive.find_first(); h != HypSet::npos; h = alive.find_next(h))
        out.push_back(static_cast<HypothesisId>(h));
    return out;
}

std::vector<std::string> validate_instance(const Instance& inst, const ValidateOptions& options) {
    std::vector<std::string> violations;
    if (!inst.space) {
        violations.push_back("instance has no query space");
        return violations;
    }
    const QuerySpace& qs = inst.qs();

    for (QueryId q = 0; q < qs.query_count(); ++q)
        for (HypothesisId h = 0; h < qs.hypothesis_count(); ++h)
            if (qs.valid_responses(q, h).empty())
                violations.push_back("valid_responses(q" + std::to_string(q) + ", h" +
                                     std::to_string(h) + ") is empty");

    if (static_cast<int>(inst.cost.size()) != qs.query_count())
        violations.push_back("cost map does not cover every query");
    for (QueryId q = 0; q < static_cast<int>(inst.cost.size()); ++q)
        if (!inst.cost[q].positive())
            violations.push_back("cost(q" + std::to_string(q) + ") must be strictly positive");

    if (inst.alpha < 1) violations.push_back("alpha must be at least 1");

    if (static_cast<int>(inst.objectives.size()) != qs.hypothesis_count())
        violations.push_back("objective map does not cover every hypothesis");
    for (HypothesisId h = 0; h < static_cast<int>(inst.objectives.size()); ++h)
        if (!inst.objectives[h])
            violations.push_back("objective for h" + std::to_string(h) + " is missing");

    if (options.check_objectives &&
        static_cast<int>(inst.objectives.size()) == qs.hypothesis_count()) {
        std::vector<QRPair> ground;
        for (QueryId q = 0; q < qs.query_count(); ++q)
            for (ResponseId r = 0; r < qs.response_count(); ++r) ground.push_back({q, r});
        for (HypothesisId h = 0; h < qs.hypothesis_count(); ++h) {
            if (!inst.objectives[h]) continue;
            if (inst.objectives[h]->value(PairSet{}) < 0) {
                violations.push_back("objective for h" + std::to_string(h) +
                                     " is negative on the empty set");
                continue;
            }
            // Objectives with a constant offset (the dominating-set form)
            // are checked with the offset removed.
            auto res = check_submodular_monotone(*shift_to_zero(inst.objectives[h]), ground,
                                                 options.ground_limit);
            if (!res.passed())
                violations.push_back("objective for h" + std::to_string(h) + ": " + res.describe());
        }
    }

    return violations;
}

}  // namespace iscover
