#pragma once

#include <cmath>
#include <cstdint>

namespace cubefit {

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, index), so sample i can be generated independently of
// samples 0..i-1 and the output never depends on thread count.

namespace detail {
// splitmix64 finalizer; full-avalanche 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t index) {
    return detail::mix64(seed ^ detail::mix64(stream ^ detail::mix64(index)));
}

// Uniform in the open interval (0,1); never returns an endpoint.
inline double uniform01(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t index) {
    const std::uint64_t b = counter_bits(seed, stream, index);
    return (static_cast<double>(b >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal via Box-Muller; consumes two substreams per draw.
inline double gaussian(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t index) {
    const double u1 = uniform01(seed, 2 * stream, index);
    const double u2 = uniform01(seed, 2 * stream + 1, index);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(6.283185307179586476925287 * u2);
}

}  // namespace cubefit
