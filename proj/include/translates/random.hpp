#pragma once

#include "translates/spectral.hpp"

#include <cstdint>
#include <random>

namespace translates {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent stream `stream` of a base seed.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ull)));
}

// Real-valued trigonometric polynomial on [-K,K]^d with standard normal
// coefficients (conjugate-symmetric pairs drawn once).
SpectralFunction random_real_spectral(int dim, Index bandwidth, std::mt19937_64 &rng);

} // namespace translates
