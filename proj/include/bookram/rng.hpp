#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace bookram {

// Deterministic, platform-independent generator: xorshift64* with splitmix64
// seeding. Streams for independent trials are derived from (seed, index), so
// parallel and serial runs of the same job see identical randomness.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(splitmix(seed ^ 0x8f1bbcdcbfa53e0bULL)) {
        if (state_ == 0) state_ = 0x9e3779b97f4a7c15ULL;
    }

    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
    }

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double prob) { return next_double() < prob; }

    // Unbiased uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    // Uniform k-subset of {0, ..., n-1}, ascending order.
    std::vector<int> sample_subset(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

  private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
};

}  // namespace bookram
