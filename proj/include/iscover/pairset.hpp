#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "iscover/rng.hpp"

namespace iscover {

using HypothesisId = int;
using QueryId = int;
using ResponseId = int;

using QRPair = std::pair<QueryId, ResponseId>;

// A set of question-response pairs: the domain of every objective.
// Stored as a sorted unique vector, which doubles as the canonical form for
// memoization keys. An order-independent 64-bit content hash is maintained
// incrementally.
class PairSet {
public:
    PairSet() = default;
    explicit PairSet(std::vector<QRPair> pairs) {
        for (const auto& [q, r] : pairs) insert(q, r);
    }

    // Returns false when the pair was already present (set semantics).
    bool insert(QueryId q, ResponseId r) {
        QRPair p{q, r};
        auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
        if (it != pairs_.end() && *it == p) return false;
        pairs_.insert(it, p);
        key_ ^= pair_token(q, r);
        return true;
    }

    bool contains(QueryId q, ResponseId r) const {
        return std::binary_search(pairs_.begin(), pairs_.end(), QRPair{q, r});
    }

    PairSet with(QueryId q, ResponseId r) const {
        PairSet out = *this;
        out.insert(q, r);
        return out;
    }

    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    const std::vector<QRPair>& pairs() const { return pairs_; }

    auto begin() const { return pairs_.begin(); }
    auto end() const { return pairs_.end(); }

    // Distinct queries, ascending.
    std::vector<QueryId> queries() const {
        std::vector<QueryId> qs;
        for (const auto& [q, r] : pairs_)
            if (qs.empty() || qs.back() != q) qs.push_back(q);
        return qs;
    }

    std::uint64_t key() const { return key_; }
    bool operator==(const PairSet& o) const { return pairs_ == o.pairs_; }

    struct Hash {
        std::size_t operator()(const PairSet& s) const { return static_cast<std::size_t>(s.key()); }
    };

private:
    static std::uint64_t pair_token(QueryId q, ResponseId r) {
        return splitmix64((static_cast<std::uint64_t>(static_cast<std::uint32_t>(q)) << 32) |
                          static_cast<std::uint32_t>(r));
    }

    std::vector<QRPair> pairs_;
    std::uint64_t key_ = 0;
};

}  // namespace iscover
