#include "iscover/objective.hpp"

#include <algorithm>
#include <utility>

#include "iscover/errors.hpp"

namespace iscover {

long long gain(const Objective& f, const PairSet& s, QueryId q, ResponseId r) {
    if (s.contains(q, r)) return 0;
    return f.value(s.with(q, r)) - f.value(s);
}

namespace {

// Sorted (q, r) -> weight table shared by the modular and max-coverage forms.
class WeightTable {
public:
    explicit WeightTable(std::vector<PairWeight> weights) {
        for (const auto& w : weights) {
            if (w.weight < 0) throw parameter_error("pair weight must be non-negative");
        }
        std::sort(weights.begin(), weights.end(), [](const PairWeight& a, const PairWeight& b) {
            return std::tie(a.query, a.response) < std::tie(b.query, b.response);
        });
        for (const auto& w : weights) {
            if (!entries_.empty() && entries_.back().query == w.query &&
                entries_.back().response == w.response)
                throw parameter_error("duplicate pair in weight table");
            entries_.push_back(w);
        }
    }

    long long weight(QueryId q, ResponseId r) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{q, r},
                                   [](const PairWeight& w, const std::pair<QueryId, ResponseId>& p) {
                                       return std::tie(w.query, w.response) < std::tie(p.first, p.second);
                                   });
        if (it != entries_.end() && it->query == q && it->response == r) return it->weight;
        return 0;
    }

private:
    std::vector<PairWeight> entries_;
};

class ModularTable final : public Objective {
public:
    explicit ModularTable(std::vector<PairWeight> w) : table_(std::move(w)) {}
    long long value(const PairSet& s) const override {
        long long total = 0;
        for (const auto& [q, r] : s) total += table_.weight(q, r);
        return total;
    }

private:
    WeightTable table_;
};

class MaxCoverage final : public Objective {
public:
    explicit MaxCoverage(std::vector<PairWeight> w) : table_(std::move(w)) {}
    long long value(const PairSet& s) const override {
        long long best = 0;
        for (const auto& [q, r] : s) best = std::max(best, table_.weight(q, r));
        return best;
    }

private:
    WeightTable table_;
};

class Sum final : public Objective {
public:
    explicit Sum(std::vector<ObjectivePtr> parts) : parts_(std::move(parts)) {
        for (const auto& p : parts_)
            if (!p) throw parameter_error("sum_objective: null part");
    }
    long long value(const PairSet& s) const override {
        long long total = 0;
        for (const auto& p : parts_) total += p->value(s);
        return total;
    }
    bool response_independent() const override {
        for (const auto& p : parts_)
            if (!p->response_independent()) return false;
        return true;
    }

private:
    std::vector<ObjectivePtr> parts_;
};

class Truncated final : public Objective {
public:
    Truncated(ObjectivePtr inner, long long cap) : inner_(std::move(inner)), cap_(cap) {
        if (!inner_) throw parameter_error("truncate: null objective");
        if (cap_ < 1) throw parameter_error("truncate: cap must be positive");
    }
    long long value(const PairSet& s) const override { return std::min(inner_->value(s), cap_); }
    bool response_independent() const override { return inner_->response_independent(); }

private:
    ObjectivePtr inner_;
    long long cap_;
};

class Shifted final : public Objective {
public:
    explicit Shifted(ObjectivePtr inner) : inner_(std::move(inner)) {
        if (!inner_) throw parameter_error("shift_to_zero: null objective");
        base_ = inner_->value(PairSet{});
    }
    long long value(const PairSet& s) const override { return inner_->value(s) - base_; }
    bool response_independent() const override { return inner_->response_independent(); }

private:
    ObjectivePtr inner_;
    long long base_;
};

}  // namespace

ObjectivePtr modular_table_objective(std::vector<PairWeight> weights) {
    return std::make_shared<ModularTable>(std::move(weights));
}

ObjectivePtr max_coverage_objective(std::vector<PairWeight> weights) {
    return std::make_shared<MaxCoverage>(std::move(weights));
}

ObjectivePtr sum_objective(std::vector<ObjectivePtr> parts) {
    return std::make_shared<Sum>(std::move(parts));
}

ObjectivePtr truncate(ObjectivePtr f, long long cap) {
    return std::make_shared<Truncated>(std::move(f), cap);
}

ObjectivePtr shift_to_zero(ObjectivePtr f) { return std::make_shared<Shifted>(std::move(f)); }

}  // namespace iscover
