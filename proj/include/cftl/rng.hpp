#pragma once

#include <cmath>
#include <cstdint>

// Self-contained counter-free PRNG so that corpora and training runs are
// bit-reproducible across standard library versions. xoshiro256++ seeded via
// splitmix64; uniform and normal draws are derived from the raw stream
// instead of std::*_distribution (whose output is implementation-defined).

namespace cftl {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64_next(sm);
        cached_normal_valid_ = false;
    }

    /// Independent deterministic stream for item `index` under `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Log-uniform over [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(bounded(span));
    }

    /// Standard normal via Marsaglia polar; pairs are cached.
    double normal() {
        if (cached_normal_valid_) {
            cached_normal_valid_ = false;
            return cached_normal_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_normal_ = v * f;
        cached_normal_valid_ = true;
        return u * f;
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    bool coin() { return (next_u64() >> 63) != 0; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    // Unbiased bounded draw by rejection.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) return next_u64();
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    std::uint64_t s_[4] = {};
    double cached_normal_ = 0.0;
    bool cached_normal_valid_ = false;
};

}  // namespace cftl
