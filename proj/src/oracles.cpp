#include "iscover/oracles.hpp"

#include <utility>

#include "iscover/composite.hpp"
#include "iscover/errors.hpp"
#include "iscover/rng.hpp"

namespace iscover {

namespace {

void check_target(const Instance& inst, HypothesisId target) {
    if (target < 0 || target >= inst.hypothesis_count())
        throw parameter_error("oracle target out of range: " + std::to_string(target));
}

class AdversarialOracle final : public Oracle {
public:
    explicit AdversarialOracle(HypothesisId target) : target_(target) {}

    ResponseId respond(const Instance& inst, QueryId q, const PairSet& s) override {
        const auto& options = inst.qs().valid_responses(q, target_);
        if (options.empty())
            throw protocol_error("no valid response for (q" + std::to_string(q) + ", h" +
                                 std::to_string(target_) + ")");
        if (options.size() == 1) return options.front();
        ResponseId best = options.front();
        long long best_value = f_bar_scaled(inst, s.with(q, best)).value;
        for (std::size_t i = 1; i < options.size(); ++i) {
            long long v = f_bar_scaled(inst, s.with(q, options[i])).value;
            if (v < best_value) {
                best_value = v;
                best = options[i];
            }
        }
        return best;
    }

private:
    HypothesisId target_;
};

class TableOracle final : public Oracle {
public:
    explicit TableOracle(std::vector<ResponseId> table) : table_(std::move(table)) {}

    ResponseId respond(const Instance&, QueryId q, const PairSet&) override {
        if (q < 0 || q >= static_cast<int>(table_.size()))
            throw protocol_error("table oracle has no entry for query " + std::to_string(q));
        return table_[q];
    }

private:
    std::vector<ResponseId> table_;
};

class RandomConsistentOracle final : public Oracle {
public:
    RandomConsistentOracle(HypothesisId target, std::uint64_t seed) : target_(target), rng_(seed) {}

    ResponseId respond(const Instance& inst, QueryId q, const PairSet&) override {
        const auto& options = inst.qs().valid_responses(q, target_);
        if (options.empty())
            throw protocol_error("no valid response for (q" + std::to_string(q) + ", h" +
                                 std::to_string(target_) + ")");
        if (options.size() == 1) return options.front();
        return options[rng_.below(options.size())];
    }

private:
    HypothesisId target_;
    Rng rng_;
};

}  // namespace

std::unique_ptr<Oracle> adversarial_oracle(const Instance& inst, HypothesisId target) {
    check_target(inst, target);
    return std::make_unique<AdversarialOracle>(target);
}

std::unique_ptr<Oracle> table_oracle(std::vector<ResponseId> table) {
    return std::make_unique<TableOracle>(std::move(table));
}

std::unique_ptr<Oracle> random_consistent_oracle(const Instance& inst, HypothesisId target,
                                                 std::uint64_t seed) {
    check_target(inst, target);
    return std::make_unique<RandomConsistentOracle>(target, seed);
}

}  // namespace iscover
