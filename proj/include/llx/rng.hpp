#pragma once

// Deterministic 64-bit random source.  We avoid <random> engines and
// distributions on purpose: the sampled streams are part of the reported
// results (seed in, bit-identical rates out), so they must not depend on the
// standard library implementation.

#include <cstdint>
#include <numeric>
#include <vector>

namespace llx {

// SplitMix64 step: good enough as a generator and as a seed mixer.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Decorrelated generator for (seed, stream): stream t of a fixed seed is
    // independent of execution order, so trial t always sees the same draws.
    static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t s = seed;
        std::uint64_t mixed = splitmix64_next(s);
        std::uint64_t t = mixed + stream * 0xbf58476d1ce4e5b9ull;
        return Rng(splitmix64_next(t));
    }

    std::uint64_t next() { return splitmix64_next(state_); }

    // Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in {0, ..., n-1}, exactly unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    std::uint64_t state_;
};

// Fisher-Yates shuffle driven by `below`, identical on every platform.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(items[i - 1], items[j]);
    }
}

inline std::vector<std::uint32_t> random_permutation(std::size_t n, Rng& rng) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    shuffle(perm, rng);
    return perm;
}

}  // namespace llx
