#pragma once

#include <cstdint>
#include <random>

namespace stec {

/// Mixes a root seed and a stream tag into an independent 64-bit seed
/// (SplitMix64 finalizer applied to the combined value).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// Stream tags used when splitting a root seed.
namespace streams {
inline constexpr std::uint64_t kSubstrate = 1;
inline constexpr std::uint64_t kWorkload = 2;
inline constexpr std::uint64_t kStrategy = 3;
} // namespace streams

/// Seeded generator with platform-independent draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are implementation-defined, so every
/// draw below is computed directly from raw 64-bit engine output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in the closed range [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1)); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    bool bernoulli(double p) { return uniform01() < p; }

    /// Exponential variate with the given mean (inverse transform).
    double exponential(double mean);

private:
    std::mt19937_64 engine_;
};

} // namespace stec
