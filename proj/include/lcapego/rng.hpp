#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace lcapego {

// Deterministic helpers on top of mt19937_64. std::uniform_real_distribution
// and friends are implementation-defined, so every draw here maps raw 64-bit
// output explicitly; the same seed yields the same stream on any platform.

/// Uniform double in (0, 1), never exactly 0 or 1.
inline double uniform01(std::mt19937_64& gen) {
    return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
}

/// Standard normal via Box-Muller.
inline double normal(std::mt19937_64& gen) {
    double u = uniform01(gen);
    double v = uniform01(gen);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

/// Complex with independent standard normal parts.
inline std::complex<double> complex_normal(std::mt19937_64& gen) {
    double u = uniform01(gen);
    double v = uniform01(gen);
    double r = std::sqrt(-2.0 * std::log(u));
    return {r * std::cos(2.0 * std::numbers::pi * v),
            r * std::sin(2.0 * std::numbers::pi * v)};
}

/// Uniform integer in [0, n). Exact (rejection-free) when n divides 2^64.
inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased for arbitrary n.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit && limit != 0);
    return x % n;
}

/// Independent per-member stream: mixes a base seed with a member index so
/// that member i of a generated family never depends on the member count.
inline std::mt19937_64 member_stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

} // namespace lcapego
