#ifndef FLCC_FIELD_HPP
#define FLCC_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace flcc {

// Canonical representative of an element of F_q, always in [0, q).
using Fe = std::uint64_t;

// Prime field F_q with a verified primitive element gamma.
// Immutable after construction; all operations are pure.
class PrimeField {
  public:
    // Finds a primitive element by searching small candidates.
    explicit PrimeField(std::uint64_t q);

    // Uses the given gamma after verifying its order is exactly q-1.
    PrimeField(std::uint64_t q, std::uint64_t gamma);

    std::uint64_t q() const { return q_; }
    Fe gamma() const { return gamma_; }

    Fe add(Fe a, Fe b) const {
        Fe s = a + b;              // q < 2^63 so no wraparound
        return s >= q_ ? s - q_ : s;
    }
    Fe sub(Fe a, Fe b) const { return a >= b ? a - b : a + q_ - b; }
    Fe neg(Fe a) const { return a == 0 ? 0 : q_ - a; }
    Fe mul(Fe a, Fe b) const {
        return static_cast<Fe>(static_cast<unsigned __int128>(a) * b % q_);
    }
    Fe pow(Fe base, std::uint64_t e) const;
    // Throws std::domain_error on inversion of zero.
    Fe inv(Fe a) const;

    // Reduces an arbitrary signed integer into [0, q).
    Fe from_int(std::int64_t v) const;

    static bool is_prime(std::uint64_t n);
    static std::uint64_t find_primitive(std::uint64_t q);

  private:
    std::uint64_t q_;
    Fe gamma_;
};

// Distinct prime factors, by trial division. Adequate for desk-scale moduli.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace flcc

#endif
