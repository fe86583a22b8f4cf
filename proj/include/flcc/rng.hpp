#ifndef FLCC_RNG_HPP
#define FLCC_RNG_HPP

#include <cstdint>
#include <random>

#include "flcc/field.hpp"

namespace flcc {

// Derives independent per-trial seeds from (master_seed, index).
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Unbiased draw from [0, bound) via rejection. Deterministic across platforms,
// unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do { v = rng(); } while (v >= limit);
    return v % bound;
}

inline Fe random_fe(std::mt19937_64& rng, const PrimeField& field) {
    return uniform_below(rng, field.q());
}

// Uniform over F_q* = F_q \ {0}.
inline Fe random_nonzero_fe(std::mt19937_64& rng, const PrimeField& field) {
    return 1 + uniform_below(rng, field.q() - 1);
}

}  // namespace flcc

#endif
