#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace extremo {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for stream `index` under `master`; streams are order-independent.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix_seed(mix_seed(master) ^ mix_seed(index + 0x632BE59BD9B4E019ULL));
}

/// mt19937_64 with library-independent real and index draws, so that
/// identical seeds give identical streams on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform on (0, 1].
    double uniform_open_low() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform on the open interval (lo, hi).
    double uniform_open(double lo, double hi) {
        for (;;) {
            const double v = uniform(lo, hi);
            if (v > lo && v < hi) return v;
        }
    }
    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        // Rejection keeps the draw unbiased.
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            const std::uint64_t v = engine_();
            if (v < limit) return static_cast<std::size_t>(v % bound);
        }
    }
    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(index(static_cast<std::size_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace extremo
