#pragma once

#include <cstdint>
#include <random>

namespace iscover {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Derive an independent stream seed (per trial, per generator stage, ...).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x51'7c'c1'b7'27'22'0a'95ull));
}

// Seeded generator with draws that do not depend on the standard library's
// distribution implementations, so identical seeds reproduce identical
// streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n). Modulo bias is irrelevant at the sizes used here.
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : engine_() % n; }

    int int_in(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) {
        return (static_cast<double>(engine_() >> 11) * 0x1.0p-53) < p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace iscover
