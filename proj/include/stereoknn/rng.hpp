#pragma once

#include <bit>
#include <cstdint>
#include <utility>

namespace stereoknn {

/// Finalizer of the splitmix64 generator; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

/// Order-sensitive combination of a running seed with one more key.
constexpr std::uint64_t hashCombine(std::uint64_t seed, std::uint64_t key) {
    return mix64(seed ^ (mix64(key) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

template <typename... Keys>
constexpr std::uint64_t hashAll(std::uint64_t seed, Keys... keys) {
    ((seed = hashCombine(seed, static_cast<std::uint64_t>(keys))), ...);
    return seed;
}

/// Bit pattern of a double, for use as a hash key.
inline std::uint64_t keyOf(double v) { return std::bit_cast<std::uint64_t>(v); }

/// splitmix64. Every estimator call owns an instance seeded explicitly, so
/// draws never depend on evaluation order and sweeps stay reproducible.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Unbiased integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Two independent standard normals (Box-Muller).
    std::pair<double, double> gaussPair();

  private:
    std::uint64_t state_;
};

/// Exact Binomial(n, p) draw. Per-shot counting up to n = 1000, CDF inversion
/// for small n*p, transformed rejection (BTRS) otherwise; every path samples
/// the exact distribution.
std::int64_t binomialDraw(std::int64_t n, double p, SplitMix64& rng);

}  // namespace stereoknn
