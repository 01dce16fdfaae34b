#pragma once

#include "skdv/fft.hpp"

#include <cstdint>
#include <random>

namespace skdv {

// Deterministic seeded generator.  Streams are split per ensemble member by
// index so parallel members draw identical values regardless of scheduling.
// Normal deviates use an explicit Box-Muller on engine bits: the standard
// distributions are not bit-portable, the engine is.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : eng_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull))) {}

    double uniform01() {
        // 53 uniform bits in [0, 1).
        return (eng_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0)
            u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    cplx cnormal() {
        double u1 = uniform01();
        while (u1 <= 0.0)
            u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-std::log(u1));
        return cplx(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
    }

    std::uint64_t bits() { return eng_(); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        // splitmix64 finalizer
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::mt19937_64 eng_;
};

} // namespace skdv
