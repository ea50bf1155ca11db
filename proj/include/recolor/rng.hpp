#pragma once

#include <cstdint>
#include <vector>

namespace recolor {

/// SplitMix64 stream. std::mt19937 + std distributions are not
/// byte-stable across standard libraries, so all randomness in the
/// generators goes through this.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). Lemire reduction with rejection.
    uint64_t below(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t x = next();
        __uint128_t m = __uint128_t(x) * bound;
        uint64_t lo = uint64_t(m);
        if (lo < bound) {
            uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                x = next();
                m = __uint128_t(x) * bound;
                lo = uint64_t(m);
            }
        }
        return uint64_t(m >> 64);
    }

    bool coin() { return below(2) == 1; }

    /// True with probability num/den.
    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace recolor
