#ifndef FLCC_FRS_HPP
#define FLCC_FRS_HPP

#include <cstddef>

#include "flcc/field.hpp"
#include "flcc/linalg.hpp"
#include "flcc/poly.hpp"
#include "flcc/rational.hpp"

namespace flcc {

// Folding geometry of an m-folded Reed-Solomon code over F_q.
// Symbol j stacks the evaluations f(gamma^{jm}), ..., f(gamma^{jm+m-1}).
struct FrsParams {
    PrimeField field;
    std::size_t n;  // unfolded length, multiple of m, n <= q-1
    std::size_t m;  // folding parameter
    std::size_t k;  // degree bound: encodes polynomials of degree < k

    FrsParams(PrimeField f, std::size_t n_, std::size_t m_, std::size_t k_);

    std::size_t block_length() const { return n / m; }  // N
    Rational rate() const { return Rational(k, n); }
};

struct FrsCodeword {
    // symbols[j] has length m; erased[j] marks a known-missing symbol whose
    // contents are ignored.
    std::vector<std::vector<Fe>> symbols;
    std::vector<bool> erased;

    std::size_t erased_count() const;
};

// Affine subspace of coefficient vectors produced by the list decoder.
// `candidates` is empty (nullopt) only when no polynomial of degree < k lies
// within the decoding radius, which cannot happen when the radius
// precondition holds for some transmitted codeword.
struct DecodeResult {
    std::optional<AffineSolution> candidates;
    std::size_t s_used = 0;

    std::size_t dimension() const { return candidates ? candidates->dimension() : 0; }
    bool contains(const PrimeField& field, const Poly& f, std::size_t k) const;
};

struct DecodingRadius {
    Rational fraction;       // may be negative for high-rate settings
    std::int64_t symbols;    // floor(fraction * (N - erasures)), clamped at 0
};

FrsCodeword frs_encode(const FrsParams& p, const Poly& f);

// Linear-algebraic list decoding with erasures. Interpolates
// Q(X, Y_1..Y_s) = A_0(X) + sum_i A_i(X) Y_i over the non-erased symbols,
// then solves A_0(X) + sum_i A_i(X) f(gamma^{i-1} X) = 0 for the coefficients
// of f. The result contains every encoding polynomial whose codeword agrees
// with y on all but at most decoding_radius(p, s, S_e).symbols of the
// non-erased positions, and has dimension at most s-1.
DecodeResult list_decode(const FrsParams& p, const FrsCodeword& y, std::size_t s);

DecodingRadius decoding_radius(const FrsParams& p, std::size_t s, std::size_t erasures);

}  // namespace flcc

#endif
