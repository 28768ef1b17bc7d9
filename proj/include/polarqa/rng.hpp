#pragma once

// Deterministic RNG with a fixed algorithm so shuffles and samples are
// byte-stable across platforms and standard libraries. std::shuffle and
// uniform_int_distribution are implementation-defined, so we roll our own
// bounded draw and Fisher-Yates.

#include <cstdint>
#include <string_view>
#include <vector>

#include "polarqa/error.hpp"

namespace polarqa {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64(sm);
    }

    // xoshiro256**
    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased draw in [0, n) by rejection.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) throw DataError("Rng::bounded: n must be positive");
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

// FNV-1a, used to derive per-dataset subseeds from (seed, name) so adding a
// dataset never perturbs another's sample.
inline std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
    std::uint64_t s = seed ^ hash_name(name);
    return splitmix64(s);
}

}  // namespace polarqa
