#pragma once

#include <cstdint>
#include <random>

namespace mcmlab {

/// Deterministic random source.  mt19937_64 output is pinned by the
/// standard, and bounded draws use explicit rejection sampling rather than
/// std distributions (whose streams are implementation-defined).
class DetRng {
public:
    explicit DetRng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        if (lo > hi) return lo;
        uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<int>(v % span);
    }

    bool coin(double p_num = 1, double p_den = 2) {
        return uniform_int(0, static_cast<int>(p_den) - 1) < static_cast<int>(p_num);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace mcmlab
