#pragma once

#include <string>
#include <vector>

#include "iscover/objective.hpp"

namespace iscover {

// Exhaustive diminishing-returns audit over a small explicit ground set:
// normalization F(empty) = 0, monotonicity, and
// F(A + v) - F(A) >= F(B + v) - F(B) for all A subset of B, v outside B.
struct SubmodularCheckResult {
    enum class Kind { pass, not_normalized, not_monotone, not_submodular };

    Kind kind = Kind::pass;
    std::vector<QRPair> set_a;
    std::vector<QRPair> set_b;
    QRPair element{-1, -1};

    bool passed() const { return kind == Kind::pass; }
    std::string describe() const;
};

// Enumerates all (A, B, v) triples (3^n pairs of nested subsets); throws
// size_limit_error when the ground set exceeds the limit. Witnesses are
// reported with the smallest B found.
SubmodularCheckResult check_submodular_monotone(const Objective& f, std::vector<QRPair> ground,
                                                int ground_limit = 12);

}  // namespace iscover
