#pragma once

#include <cmath>
#include <cstdint>

namespace gmidas {

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, counter), so simulations replay identically regardless of
// platform or evaluation order. The generator is SplitMix64 evaluated at an
// arbitrary position; stream seeds are derived from the user seed with a
// second mixing pass. See docs/FORMATS.md for the exact layout.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : state_(finalize(seed + (stream + 1) * 0xbf58476d1ce4e5b9ULL)) {}

    std::uint64_t word(std::uint64_t counter) const {
        return finalize(state_ + (counter + 1) * 0x9e3779b97f4a7c15ULL);
    }

    // Uniform on the open interval (0, 1).
    double uniform(std::uint64_t counter) const {
        return (static_cast<double>(word(counter) >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (cosine branch); one draw per counter.
    double normal(std::uint64_t counter) const {
        constexpr double two_pi = 6.283185307179586476925286766559;
        const double u1 = uniform(2 * counter);
        const double u2 = uniform(2 * counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

private:
    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace gmidas
