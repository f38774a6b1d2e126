#include "iscover/submodular_check.hpp"

#include <bit>
#include <cstdint>

#include "iscover/errors.hpp"

namespace iscover {

namespace {

std::vector<QRPair> subset_of(const std::vector<QRPair>& ground, std::uint32_t mask) {
    std::vector<QRPair> out;
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (mask & (1u << i)) out.push_back(ground[i]);
    return out;
}

std::string pair_str(const QRPair& p) {
    return "(q" + std::to_string(p.first) + ",r" + std::to_string(p.second) + ")";
}

std::string set_str(const std::vector<QRPair>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += pair_str(s[i]);
    }
    return out + "}";
}

}  // namespace

std::string SubmodularCheckResult::describe() const {
    switch (kind) {
        case Kind::pass:
            return "pass";
        case Kind::not_normalized:
            return "not normalized: F(empty) != 0";
        case Kind::not_monotone:
            return "not monotone: adding " + pair_str(element) + " to " + set_str(set_a) +
                   " decreases the value";
        case Kind::not_submodular:
            return "not submodular: gain of " + pair_str(element) + " at " + set_str(set_a) +
                   " is below the gain at " + set_str(set_b);
    }
    return "?";
}

SubmodularCheckResult check_submodular_monotone(const Objective& f, std::vector<QRPair> ground,
                                                int ground_limit) {
    const int n = static_cast<int>(ground.size());
    if (n > ground_limit || n > 24)
        throw size_limit_error("submodularity check: ground set of " + std::to_string(n) +
                               " exceeds the limit of " + std::to_string(ground_limit));

    const std::uint32_t full = n == 0 ? 0u : ((1u << n) - 1u);
    std::vector<long long> val(static_cast<std::size_t>(full) + 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        val[mask] = f.value(PairSet(subset_of(ground, mask)));

    SubmodularCheckResult res;
    if (val[0] != 0) {
        res.kind = SubmodularCheckResult::Kind::not_normalized;
        return res;
    }

    // Masks ascending by popcount, so the first witness uses the smallest B.
    std::vector<std::uint32_t> order;
    order.reserve(full + 1);
    for (int pc = 0; pc <= n; ++pc)
        for (std::uint32_t mask = 0; mask <= full; ++mask)
            if (std::popcount(mask) == pc) order.push_back(mask);

    for (std::uint32_t mask : order) {
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v)) continue;
            if (val[mask | (1u << v)] < val[mask]) {
                res.kind = SubmodularCheckResult::Kind::not_monotone;
                res.set_a = res.set_b = subset_of(ground, mask);
                res.element = ground[v];
                return res;
            }
        }
    }

    for (std::uint32_t b : order) {
        for (int v = 0; v < n; ++v) {
            if (b & (1u << v)) continue;
            const long long gain_b = val[b | (1u << v)] - val[b];
            // All proper submasks of b.
            for (std::uint32_t a = (b - 1) & b;; a = (a - 1) & b) {
                const long long gain_a = val[a | (1u << v)] - val[a];
                if (gain_a < gain_b) {
                    res.kind = SubmodularCheckResult::Kind::not_submodular;
                    res.set_a = subset_of(ground, a);
                    res.set_b = subset_of(ground, b);
                    res.element = ground[v];
                    return res;
                }
                if (a == 0) break;
            }
        }
    }

    return res;
}

}  // namespace iscover
