#pragma once

#include <cmath>
#include <cstdint>

namespace uavnet {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
}  // namespace detail

/// splitmix64 stream, trivially splittable: every Monte
/// Carlo trial gets its own stream derived from (seed, trial index), so
/// results do not depend on execution order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        return detail::mix64(z);
    }

    /// Uniform on (0, 1]; safe as the argument of log().
    double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform on [0, 1).
    double uniform01_halfopen() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double prob) { return uniform01_halfopen() < prob; }

    /// Exponential with unit mean.
    double exponential() { return -std::log(uniform01()); }

    /// Gamma with integer shape m, scale 1/m (unit mean): sum of m unit
    /// exponentials divided by m.
    double gamma_unit_mean(int m) {
        double sum = 0.0;
        for (int i = 0; i < m; ++i) sum += exponential();
        return sum / static_cast<double>(m);
    }

private:
    std::uint64_t state_;
};

/// Independent, reproducible substream for one trial of a seeded run.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    const std::uint64_t a = detail::mix64(seed + 0x9E3779B97F4A7C15ull);
    const std::uint64_t b = detail::mix64((trial + 1) * 0xD2B74407B1CE6E93ull);
    return SplitMix64(a ^ b);
}

}  // namespace uavnet
