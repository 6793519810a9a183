#pragma once

#include <cstdint>
#include <vector>

#include "tensorcolor/rational.hpp"

namespace tc {

// splitmix64 step; used to expand a 64-bit seed into xoshiro state.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * xoshiro256** seeded through splitmix64.  All randomness in the library flows
 * through this generator so that runs are reproducible bit-for-bit across
 * platforms and languages; both algorithms have published reference
 * implementations (see the PRNG section of the README for the exact
 * construction and test vectors).
 */
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    uint64_t next_u64() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, bound) by rejection, so the distribution is exact and
    // identical on every platform.
    uint64_t uniform(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t r;
        do { r = next_u64(); } while (r >= limit);
        return r % bound;
    }

    // Bernoulli draw with exact rational probability p = num/den.
    bool coin(const Rat& p) {
        if (p.num <= 0) return false;
        if (p.num >= p.den) return true;
        return uniform((uint64_t)p.den) < (uint64_t)p.num;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = (size_t)uniform(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace tc
