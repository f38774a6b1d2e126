#pragma once

#include <vector>

#include "iscover/instance.hpp"

namespace iscover {

// The composite objective, kept as the exact integer |H| * F_bar so that
// every greedy step moves it by at least 1 and bound audits stay rational.
struct ScaledCompositeValue {
    long long value = 0;      // sum over surviving h of min(alpha, F_h) + alpha * |eliminated|
    long long threshold = 0;  // alpha * |H|

    bool satisfied() const { return value >= threshold; }
};

ScaledCompositeValue f_bar_scaled(const Instance& inst, const PairSet& s);
// Variant for hot paths where the version space of s is already known.
ScaledCompositeValue f_bar_scaled(const Instance& inst, const PairSet& s, const HypSet& alive);

// True iff F_h(s) >= alpha for every h still consistent with s.
bool f_bar_satisfied(const Instance& inst, const PairSet& s);

// |H| - |V(s)|: hypotheses eliminated by s. Shares the instance's
// question-response structure.
ObjectivePtr elim_count_objective(const Instance& inst);

struct ApproxLearningParams {
    int data_points = 0;                           // |X|
    int kappa = 0;                                 // mistake budget, 0 <= kappa <= |X|
    std::vector<std::vector<int>> predictions;     // [h][x] labels
};

// Saturating agreement-with-target objective: reaches |H| * (|X| - kappa)
// exactly when every surviving hypothesis disagrees with the target on at
// most kappa points.
ObjectivePtr approx_learning_objective(const Instance& inst, const ApproxLearningParams& params,
                                       HypothesisId target);

// The scaled composite as an Objective, for the exhaustive submodularity
// check (captures a copy of the instance).
ObjectivePtr composite_objective(Instance inst);

}  // namespace iscover
