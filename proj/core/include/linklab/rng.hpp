#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

namespace linklab {

/// Seedable random source used everywhere randomness is needed.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// C++ standard, and the Gaussian transform is an explicit Box-Muller so
/// that draws are bit-identical across standard libraries. Golden fixtures
/// in the test suite depend on this exact construction.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound] inclusive. Uses rejection sampling so
    /// the distribution is exact for any bound.
    std::uint64_t uniform_int(std::uint64_t bound) {
        if (bound == UINT64_MAX) return next_u64();
        const std::uint64_t range = bound + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % range;
    }

    /// Two independent standard-normal samples (Box-Muller).
    std::pair<double, double> gaussian_pair() {
        // u1 in (0,1] keeps the log finite; u2 in [0,1).
        const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent stream seeds from a
/// master seed without correlated low bits.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for the k-th derived stream (per-frame noise, per-point sweeps).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_index) {
    return mix_seed(master + 0x9E3779B97F4A7C15ull * (stream_index + 1));
}

}  // namespace linklab
