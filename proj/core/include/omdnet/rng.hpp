#pragma once

#include <cstdint>

// Counter-based generator: every value is a pure function of (seed, counter),
// so parallel consumers stay deterministic without shared state.
namespace omdnet::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + kGolden * (counter + 1));
}

// uniform double in [0,1) with 53 random mantissa bits
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(at(seed, counter) >> 11) * 0x1.0p-53;
}

// per-trial seed derived from a master seed
inline std::uint64_t substream(std::uint64_t master, std::uint64_t index) {
    return at(mix64(master), index);
}

}  // namespace omdnet::rng
