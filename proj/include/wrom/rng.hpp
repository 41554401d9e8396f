#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace wrom {

// Deterministic random stream. Every randomized operation in the library
// draws from a caller-supplied stream; there is no global randomness.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(mix(seed)) {}

    // Statistically independent stream for trial `index` of a run keyed by
    // `base_seed`. Documented so external tooling can reproduce trials.
    static RandomStream derive(std::uint64_t base_seed, std::uint64_t index) {
        return RandomStream(mix(base_seed) ^ mix(index + 0x632be59bd9b4e019ull));
    }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform w-bit value, w <= 32.
    std::uint32_t bits(unsigned w) {
        if (w == 0) return 0;
        if (w > 32) throw std::invalid_argument("RandomStream::bits: w > 32");
        return static_cast<std::uint32_t>(next_u64() >> (64 - w));
    }

    // Uniform draw from [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("RandomStream::below: n == 0");
        if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
        const std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
        std::uint64_t r;
        do {
            r = next_u64();
        } while (rem != 0 && r > ~rem);
        return r % n;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return real01() < p;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
};

}  // namespace wrom
