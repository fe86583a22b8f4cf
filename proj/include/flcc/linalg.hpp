#ifndef FLCC_LINALG_HPP
#define FLCC_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flcc/field.hpp"

namespace flcc {

// Dense row-major matrix over F_q.
struct MatFq {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Fe> data;

    MatFq() = default;
    MatFq(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    Fe& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    Fe at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static MatFq identity(std::size_t n) {
        MatFq m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

MatFq mat_mul(const PrimeField& field, const MatFq& a, const MatFq& b);
std::vector<Fe> mat_vec(const PrimeField& field, const MatFq& a, std::span<const Fe> x);

// Full parametrization {particular + basis * x} of the solutions of a linear
// system. The rows of `basis` indexed by `free_rows` form an identity matrix,
// so a candidate vector v solves the system iff basis * v[free_rows] matches
// v - particular.
struct AffineSolution {
    std::vector<Fe> particular;       // z
    MatFq basis;                      // M, one column per free variable
    std::vector<size_t> free_rows;    // rows of M carrying the identity

    std::size_t dimension() const { return basis.cols; }

    // particular + basis * x
    std::vector<Fe> point(const PrimeField& field, std::span<const Fe> x) const;

    // True iff v lies in the affine subspace.
    bool contains(const PrimeField& field, std::span<const Fe> v) const;
};

// Reduced row echelon form. Pivot scan is top-to-bottom, left-to-right, first
// nonzero entry wins; output is deterministic.
std::pair<MatFq, std::vector<std::size_t>> rref(const PrimeField& field, MatFq a);

std::size_t rank(const PrimeField& field, const MatFq& a);

// Solves A x = b; nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const PrimeField& field, const MatFq& a,
                                           std::span<const Fe> b);

// Columns form a basis of {v : A v = 0}; width = cols - rank(A).
MatFq null_space(const PrimeField& field, const MatFq& a);

// Row i = (1, nodes[i], nodes[i]^2, ..., nodes[i]^{k-1}).
MatFq vandermonde(const PrimeField& field, std::span<const Fe> nodes, std::size_t k);

}  // namespace flcc

#endif
