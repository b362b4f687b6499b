#pragma once

#include <complex>
#include <cstdint>

namespace tracecert {

/// SplitMix64 finalizer: a bijective 64-bit mixing function.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for the index-th independent stream derived from a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return seed ^ splitmix64(index);
}

/// Counter-based generator: output i is splitmix64(seed + i * golden).
/// Bit-identical on every platform, unlike the std distributions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        const std::uint64_t out = splitmix64(state_);
        state_ += 0x9e3779b97f4a7c15ULL;
        return out;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

    /// Standard normal via Box-Muller.
    double normal() noexcept;
    std::complex<double> complex_normal() noexcept { return {normal(), normal()}; }

private:
    std::uint64_t state_;
};

} // namespace tracecert
