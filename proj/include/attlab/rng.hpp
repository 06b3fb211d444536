#pragma once

#include <cmath>
#include <cstdint>

namespace attlab {

namespace detail {
inline uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Counter-based generator: every draw is a pure function of (seed, stream,
/// counter). Random access, no mutable state, so Monte Carlo workers produce
/// identical values regardless of evaluation order or thread count.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : key_(detail::mix64(detail::mix64(seed) ^ (0xA0761D6478BD642Full * (stream + 1)))) {}

    uint64_t bits(uint64_t counter) const {
        return detail::mix64(detail::mix64(key_ ^ (counter * 0xD1B54A32D192ED03ull)));
    }

    /// Uniform in [0, 1).
    double uniform(uint64_t counter) const {
        return double(bits(counter) >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; one counter slot per draw.
    double normal(uint64_t counter) const {
        double u1 = uniform(counter * 2 + 0x1234567);
        double u2 = double(bits(counter * 2 + 1 + 0x1234567) >> 11) * 0x1.0p-53;
        if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    /// Uniform integer in [0, bound).
    uint64_t uniform_int(uint64_t counter, uint64_t bound) const {
        return bits(counter) % bound;  // modulo bias negligible for small bounds
    }

private:
    uint64_t key_;
};

}  // namespace attlab
