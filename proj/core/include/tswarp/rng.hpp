#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tswarp {

/// Mixes a master seed with up to two stream coordinates so that every
/// (seed, a, b) tuple owns an independent, schedule-free random stream.
[[nodiscard]] inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a = 0,
                                            std::uint64_t b = 0) {
    // splitmix64 finalizer applied to the running combination
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return mix(mix(mix(seed) ^ a) ^ b);
}

/**
 * Deterministic random source. The engine is std::mt19937_64 (fully
 * specified by the standard); the uniform and normal transforms are
 * implemented here rather than with std:: distributions, whose output is
 * implementation-defined and would break cross-platform reproducibility.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

    [[nodiscard]] std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    [[nodiscard]] double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [a, b).
    [[nodiscard]] double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in [0, n).
    [[nodiscard]] std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Uniform integer in [lo, hi], inclusive.
    [[nodiscard]] long long int_range(long long lo, long long hi) {
        return lo + static_cast<long long>(index(static_cast<std::size_t>(hi - lo + 1)));
    }

    /// Standard normal via Box-Muller, one spare cached.
    [[nodiscard]] double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1) so the log is finite
        const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586476925286766559 * u2;
        spare_ = mag * std::sin(ang);
        has_spare_ = true;
        return mag * std::cos(ang);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace tswarp
