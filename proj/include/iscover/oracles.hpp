#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "iscover/run.hpp"

namespace iscover {

// Per-step adversary: answers within valid_responses(q, target) so as to
// minimize the composite objective, ties to the smallest response id.
std::unique_ptr<Oracle> adversarial_oracle(const Instance& inst, HypothesisId target);

// Fixed answer table indexed by query id; need not be consistent with any
// hypothesis (the version space may empty).
std::unique_ptr<Oracle> table_oracle(std::vector<ResponseId> table);

// Uniform draw from valid_responses(q, target); same seed, same stream.
// Singleton response sets consume no randomness.
std::unique_ptr<Oracle> random_consistent_oracle(const Instance& inst, HypothesisId target,
                                                 std::uint64_t seed);

}  // namespace iscover
