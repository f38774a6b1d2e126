#pragma once

#include <memory>
#include <tuple>
#include <vector>

#include "iscover/pairset.hpp"

namespace iscover {

// Integer-valued set function over Q x R. Implementations used with the
// solver must be normalized (value on the empty set is 0 unless stated
// otherwise), monotone non-decreasing, and submodular; check_submodular_monotone
// verifies all three exhaustively on small ground sets.
class Objective {
public:
    virtual ~Objective() = default;

    virtual long long value(const PairSet& s) const = 0;

    // True when value() depends only on which queries appear in s, never on
    // the responses. Lets non-adaptive planning skip response enumeration.
    virtual bool response_independent() const { return false; }
};

using ObjectivePtr = std::shared_ptr<const Objective>;

// f(s + p) - f(s); non-negative for monotone f.
long long gain(const Objective& f, const PairSet& s, QueryId q, ResponseId r);

// Weighted pair entry used by the table-driven constructions.
struct PairWeight {
    QueryId query;
    ResponseId response;
    long long weight;  // must be >= 0
};

// Modular: sum of per-pair weights over s (unlisted pairs weigh 0).
ObjectivePtr modular_table_objective(std::vector<PairWeight> weights);

// Max-coverage: max per-pair weight over s, 0 on the empty set.
ObjectivePtr max_coverage_objective(std::vector<PairWeight> weights);

ObjectivePtr sum_objective(std::vector<ObjectivePtr> parts);

// min(f(s), cap); preserves monotonicity and submodularity.
ObjectivePtr truncate(ObjectivePtr f, long long cap);

// f(s) - f(empty); restores normalization for constant-shifted objectives.
ObjectivePtr shift_to_zero(ObjectivePtr f);

}  // namespace iscover
