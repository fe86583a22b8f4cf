#ifndef FLCC_PRUNE_HPP
#define FLCC_PRUNE_HPP

#include <cstdint>
#include <random>

#include "flcc/frs.hpp"
#include "flcc/linalg.hpp"
#include "flcc/poly.hpp"

namespace flcc {

// Points in F_q* at which error-free evaluations of f are requested.
struct SideInfoRequest {
    std::vector<Fe> points;
};

// Either the uniquely recovered polynomial or a detected failure; never a
// silently wrong polynomial when the side information is error-free and the
// true polynomial lies in the subspace.
struct PruneOutcome {
    bool unique = false;
    Poly f;

    static PruneOutcome success(Poly p) { return {true, std::move(p)}; }
    static PruneOutcome detected_failure() { return {false, {}}; }
};

// Deterministic point selection per the full-rank Vandermonde argument:
// returns l = dim(subspace) distinct nonzero points whose Vandermonde rows
// make V*M invertible. The pool is enumerated as successive powers of gamma.
// Throws when q-1 < k (no rank-k Vandermonde pool exists).
SideInfoRequest select_points_deterministic(const PrimeField& field, const DecodeResult& d,
                                            std::size_t k);

// t distinct points sampled uniformly without replacement from F_q*.
SideInfoRequest select_points_random(const PrimeField& field, std::size_t t, std::uint64_t seed);

// Solves y_e - V z = (V M) x. Unique iff V*M has full column rank; otherwise
// DetectedFailure. `values[i]` must equal f(req.points[i]).
PruneOutcome prune(const PrimeField& field, const DecodeResult& d, const SideInfoRequest& req,
                   std::span<const Fe> values, std::size_t k);

// Success-probability lower bounds, clamped into [0, 1].
double bound_ours(std::uint64_t q, std::uint64_t k, std::uint64_t l, std::uint64_t t);
double bound_gr2016(std::uint64_t q, std::uint64_t k, std::uint64_t num_evals);
double bound_saraf(std::uint64_t n, std::uint64_t k, std::uint64_t l, std::uint64_t t);

}  // namespace flcc

#endif
