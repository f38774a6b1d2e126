#include "iscover/policies.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "iscover/composite.hpp"
#include "iscover/errors.hpp"

namespace iscover {

namespace {

// gain_a / cost_a > gain_b / cost_b by cross-multiplication; gains are
// non-negative integers and costs strictly positive rationals.
bool ratio_greater(long long gain_a, const Rational& cost_a, long long gain_b,
                   const Rational& cost_b) {
    using wide = __int128;
    return wide(gain_a) * cost_a.den() * cost_b.num() > wide(gain_b) * cost_b.den() * cost_a.num();
}

long long composite_base(const Instance& inst, const PairSet& s, const HypSet& alive) {
    return f_bar_scaled(inst, s, alive).value;
}

// min over responses the adversary could legally give of the composite gain.
long long worst_gain_at(const Instance& inst, const PairSet& s, const HypSet& alive,
                        long long base, QueryId q) {
    const QuerySpace& qs = inst.qs();
    long long worst = std::numeric_limits<long long>::max();
    bool any = false;
    for (ResponseId r : qs.response_domain(q)) {
        if (!(qs.consistent_mask(q, r) & alive).any()) continue;  // no surviving h allows r
        any = true;
        HypSet next_alive = alive & qs.consistent_mask(q, r);
        long long value = f_bar_scaled(inst, s.with(q, r), next_alive).value;
        worst = std::min(worst, value - base);
        if (worst == 0) break;  // gains are non-negative; 0 is the floor
    }
    return any ? worst : 0;
}

}  // namespace

WorstCaseGain worst_case_gain(const Instance& inst, const PairSet& s, QueryId q) {
    if (q < 0 || q >= inst.query_count())
        throw parameter_error("worst_case_gain: unknown query id " + std::to_string(q));
    WorstCaseGain out;
    out.cost = inst.cost[q];
    HypSet alive = inst.qs().version_space(s);
    if (alive.none()) return out;
    out.scaled_gain = worst_gain_at(inst, s, alive, composite_base(inst, s, alive), q);
    return out;
}

std::optional<QueryId> greedy_choice(const Instance& inst, const PairSet& s) {
    HypSet alive = inst.qs().version_space(s);
    ScaledCompositeValue current = f_bar_scaled(inst, s, alive);
    if (current.satisfied()) return std::nullopt;

    QueryId best_q = -1;
    long long best_gain = 0;
    for (QueryId q = 0; q < inst.query_count(); ++q) {
        long long g = worst_gain_at(inst, s, alive, current.value, q);
        if (g <= 0) continue;
        if (best_q < 0 || ratio_greater(g, inst.cost[q], best_gain, inst.cost[best_q])) {
            best_q = q;
            best_gain = g;
        }
    }
    if (best_q < 0)
        throw infeasible_error(
            "greedy: no query has positive worst-case gain while the objective is unsatisfied");
    return best_q;
}

namespace {

class GreedyPolicy final : public Policy {
public:
    std::optional<QueryId> next(const Instance& inst, const PairSet& s, const Transcript&) override {
        return greedy_choice(inst, s);
    }
};

class NaiveGreedyPolicy final : public Policy {
public:
    std::optional<QueryId> next(const Instance& inst, const PairSet& s,
                                const Transcript& transcript) override {
        const QuerySpace& qs = inst.qs();
        HypSet alive = qs.version_space(s);

        // Stop when every surviving hypothesis meets its own threshold.
        std::vector<long long> current(inst.hypothesis_count(), 0);
        bool satisfied = true;
        for (auto h = alive.find_first(); h != HypSet::npos; h = alive.find_next(h)) {
            current[h] = inst.objectives[h]->value(s);
            if (current[h] < inst.alpha) satisfied = false;
        }
        if (satisfied) return std::nullopt;

        std::vector<bool> asked(inst.query_count(), false);
        for (const auto& [q, r] : transcript.steps) asked[q] = true;

        QueryId best_q = -1;
        long long best_gain = 0;
        for (QueryId q = 0; q < inst.query_count(); ++q) {
            if (asked[q]) continue;
            long long worst = std::numeric_limits<long long>::max();
            for (auto h = alive.find_first(); h != HypSet::npos && worst > 0;
                 h = alive.find_next(h)) {
                for (ResponseId r : qs.valid_responses(q, static_cast<HypothesisId>(h))) {
                    long long g = inst.objectives[h]->value(s.with(q, r)) - current[h];
                    worst = std::min(worst, g);
                    if (worst == 0) break;
                }
            }
            if (worst == std::numeric_limits<long long>::max()) worst = 0;
            if (best_q < 0 || ratio_greater(worst, inst.cost[q], best_gain, inst.cost[best_q])) {
                best_q = q;
                best_gain = worst;
            }
        }
        if (best_q < 0)
            throw infeasible_error("naive greedy: every query asked while unsatisfied");
        return best_q;
    }
};

class LearnThenCoverPolicy final : public Policy {
public:
    std::optional<QueryId> next(const Instance& inst, const PairSet& s, const Transcript&) override {
        const QuerySpace& qs = inst.qs();
        HypSet alive = qs.version_space(s);
        if (alive.none())
            throw inconsistent_oracle_error("learn then cover: version space emptied");

        if (alive.count() > 1) {
            // Identification: maximize guaranteed eliminations per unit cost.
            QueryId best_q = -1;
            long long best_elim = 0;
            const long long alive_count = static_cast<long long>(alive.count());
            for (QueryId q = 0; q < inst.query_count(); ++q) {
                long long worst = std::numeric_limits<long long>::max();
                for (ResponseId r : qs.response_domain(q)) {
                    HypSet kept = alive & qs.consistent_mask(q, r);
                    if (kept.none()) continue;
                    worst = std::min(worst, alive_count - static_cast<long long>(kept.count()));
                    if (worst == 0) break;
                }
                if (worst == std::numeric_limits<long long>::max()) continue;
                if (worst > 0 &&
                    (best_q < 0 || ratio_greater(worst, inst.cost[q], best_elim, inst.cost[best_q]))) {
                    best_q = q;
                    best_elim = worst;
                }
            }
            if (best_q >= 0) return best_q;
            // No query can guarantee progress (mutually indistinguishable
            // survivors); fall through and cover all of them.
        }

        // Covering: greedy set cover on the surviving objectives.
        std::vector<long long> current(inst.hypothesis_count(), 0);
        bool satisfied = true;
        for (auto h = alive.find_first(); h != HypSet::npos; h = alive.find_next(h)) {
            current[h] = inst.objectives[h]->value(s);
            if (current[h] < inst.alpha) satisfied = false;
        }
        if (satisfied) return std::nullopt;

        QueryId best_q = -1;
        long long best_gain = 0;
        for (QueryId q = 0; q < inst.query_count(); ++q) {
            long long worst = std::numeric_limits<long long>::max();
            for (auto h = alive.find_first(); h != HypSet::npos && worst > 0;
                 h = alive.find_next(h)) {
                for (ResponseId r : qs.valid_responses(q, static_cast<HypothesisId>(h))) {
                    worst = std::min(worst, inst.objectives[h]->value(s.with(q, r)) - current[h]);
                    if (worst == 0) break;
                }
            }
            if (worst == std::numeric_limits<long long>::max()) worst = 0;
            if (worst > 0 &&
                (best_q < 0 || ratio_greater(worst, inst.cost[q], best_gain, inst.cost[best_q]))) {
                best_q = q;
                best_gain = worst;
            }
        }
        if (best_q < 0)
            throw infeasible_error("learn then cover: covering phase cannot make progress");
        return best_q;
    }
};

// --- Cover All -------------------------------------------------------------

// Sum over all hypotheses of min(alpha, F_h); alpha * |H| iff every group's
// constraint holds.
long long coverage_total(const Instance& inst, const PairSet& s) {
    long long total = 0;
    for (const auto& f : inst.objectives) total += std::min(inst.alpha, f->value(s));
    return total;
}

struct WorstAssignment {
    long long value = 0;
    PairSet pairs;  // lexicographically-first minimizing assignment
};

// Minimum of coverage_total over all per-query response assignments on the
// selected queries. Response-independent objectives need a single
// evaluation; otherwise the full product of response domains is enumerated.
WorstAssignment worst_assignment(const Instance& inst, const std::vector<QueryId>& selected) {
    const QuerySpace& qs = inst.qs();
    bool independent = true;
    for (const auto& f : inst.objectives) independent &= f->response_independent();

    if (independent || selected.empty()) {
        WorstAssignment out;
        for (QueryId q : selected) out.pairs.insert(q, qs.response_domain(q).front());
        out.value = coverage_total(inst, out.pairs);
        return out;
    }

    long long combos = 1;
    for (QueryId q : selected) {
        combos *= static_cast<long long>(qs.response_domain(q).size());
        if (combos > (1ll << 20))
            throw size_limit_error("cover all: too many response assignments to certify");
    }

    WorstAssignment out;
    bool first = true;
    std::vector<std::size_t> odo(selected.size(), 0);
    for (;;) {
        PairSet pairs;
        for (std::size_t i = 0; i < selected.size(); ++i)
            pairs.insert(selected[i], qs.response_domain(selected[i])[odo[i]]);
        long long v = coverage_total(inst, pairs);
        if (first || v < out.value) {
            out.value = v;
            out.pairs = std::move(pairs);
            first = false;
        }
        std::size_t i = selected.size();
        while (i > 0) {
            --i;
            if (++odo[i] < qs.response_domain(selected[i]).size()) break;
            odo[i] = 0;
            if (i == 0) return out;
        }
        if (selected.empty()) return out;
    }
}

class CoverAllPolicy final : public Policy {
public:
    explicit CoverAllPolicy(std::vector<QueryId> plan) : plan_(std::move(plan)) {}
    std::optional<QueryId> next(const Instance&, const PairSet&, const Transcript& t) override {
        if (t.steps.size() < plan_.size()) return plan_[t.steps.size()];
        return std::nullopt;
    }

private:
    std::vector<QueryId> plan_;
};

}  // namespace

std::vector<QueryId> cover_all_plan(const Instance& inst) {
    const QuerySpace& qs = inst.qs();
    const long long cap = inst.alpha * inst.hypothesis_count();

    std::vector<QueryId> selected;
    std::vector<bool> in_plan(inst.query_count(), false);
    for (;;) {
        WorstAssignment worst = worst_assignment(inst, selected);
        if (worst.value >= cap) return selected;
        if (static_cast<int>(selected.size()) == inst.query_count())
            throw infeasible_error("cover all: coverage cannot be guaranteed for every response");

        QueryId best_q = -1;
        long long best_gain = 0;
        for (QueryId q = 0; q < inst.query_count(); ++q) {
            if (in_plan[q]) continue;
            long long worst_gain = std::numeric_limits<long long>::max();
            for (ResponseId r : qs.response_domain(q)) {
                worst_gain =
                    std::min(worst_gain, coverage_total(inst, worst.pairs.with(q, r)) - worst.value);
                if (worst_gain == 0) break;
            }
            if (worst_gain == std::numeric_limits<long long>::max()) worst_gain = 0;
            if (worst_gain > 0 && (best_q < 0 || ratio_greater(worst_gain, inst.cost[q], best_gain,
                                                               inst.cost[best_q]))) {
                best_q = q;
                best_gain = worst_gain;
            }
        }
        if (best_q < 0)
            throw infeasible_error("cover all: no query improves the worst-case coverage");
        selected.push_back(best_q);
        in_plan[best_q] = true;
    }
}

std::unique_ptr<Policy> greedy_policy(const Instance&) { return std::make_unique<GreedyPolicy>(); }

std::unique_ptr<Policy> naive_greedy_policy(const Instance&) {
    return std::make_unique<NaiveGreedyPolicy>();
}

std::unique_ptr<Policy> learn_then_cover_policy(const Instance&) {
    return std::make_unique<LearnThenCoverPolicy>();
}

std::unique_ptr<Policy> cover_all_policy(const Instance& inst) {
    return std::make_unique<CoverAllPolicy>(cover_all_plan(inst));
}

std::unique_ptr<Policy> make_policy(const std::string& name, const Instance& inst) {
    if (name == "greedy") return greedy_policy(inst);
    if (name == "naive-greedy") return naive_greedy_policy(inst);
    if (name == "learn-then-cover") return learn_then_cover_policy(inst);
    if (name == "cover-all") return cover_all_policy(inst);
    throw parameter_error("unknown policy: " + name);
}

}  // namespace iscover
