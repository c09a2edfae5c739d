#pragma once

#include <cstdint>
#include <random>

namespace listnet {

/// splitmix64 of (seed, stream): derives independent seed streams from one
/// user-facing seed without the streams ever colliding for small stream ids.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) built from the top 53 bits of the generator.
/// Stable across standard-library implementations, unlike the std
/// distributions.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(gen);
}

/// Index in [0, n) by multiply-shift; bias is below 2^-64 per draw.
inline std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(gen()) * static_cast<unsigned __int128>(n)) >> 64);
}

}  // namespace listnet
