#ifndef FLCC_POLY_HPP
#define FLCC_POLY_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "flcc/field.hpp"

namespace flcc {

// Dense coefficient vector; index i holds the coefficient of X^i.
// Trailing zeros are tolerated everywhere.
using Poly = std::vector<Fe>;

Fe poly_eval(const PrimeField& field, const Poly& p, Fe x);

std::size_t poly_degree(const Poly& p);  // degree of zero polynomial is 0

Poly poly_add(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_scale(const PrimeField& field, const Poly& p, Fe c);
Poly poly_mul(const PrimeField& field, const Poly& a, const Poly& b);

// True iff the two polynomials agree coefficient-wise up to trailing zeros.
bool poly_equal(const Poly& a, const Poly& b);

// The Lagrange basis polynomial for node j (0-based) over the given
// pairwise-distinct nodes: value 1 at nodes[j], 0 at the others.
// Throws on duplicate nodes.
Poly lagrange_monomial(const PrimeField& field, std::size_t j, std::span<const Fe> nodes);

// Unique polynomial of degree < points.size() through all (x, y) pairs.
// Throws on duplicate x values.
Poly interpolate(const PrimeField& field, std::span<const std::pair<Fe, Fe>> points);

}  // namespace flcc

#endif
