#include "flcc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace flcc {

MatFq mat_mul(const PrimeField& field, const MatFq& a, const MatFq& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    MatFq out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            Fe v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = field.add(out.at(i, j), field.mul(v, b.at(k, j)));
        }
    }
    return out;
}

std::vector<Fe> mat_vec(const PrimeField& field, const MatFq& a, std::span<const Fe> x) {
    if (a.cols != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<Fe> out(a.rows, 0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        Fe acc = 0;
        for (std::size_t j = 0; j < a.cols; ++j)
            acc = field.add(acc, field.mul(a.at(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

std::vector<Fe> AffineSolution::point(const PrimeField& field, std::span<const Fe> x) const {
    std::vector<Fe> v = particular;
    if (basis.cols != x.size()) throw std::invalid_argument("AffineSolution::point: wrong arity");
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < basis.cols; ++j)
            v[i] = field.add(v[i], field.mul(basis.at(i, j), x[j]));
    return v;
}

bool AffineSolution::contains(const PrimeField& field, std::span<const Fe> v) const {
    if (v.size() != particular.size()) return false;
    // The identity rows pin the only possible coordinates.
    std::vector<Fe> x(basis.cols);
    for (std::size_t j = 0; j < basis.cols; ++j)
        x[j] = field.sub(v[free_rows[j]], particular[free_rows[j]]);
    std::vector<Fe> rebuilt = point(field, x);
    return std::equal(rebuilt.begin(), rebuilt.end(), v.begin());
}

std::pair<MatFq, std::vector<std::size_t>> rref(const PrimeField& field, MatFq a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t sel = row;
        while (sel < a.rows && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(sel, j), a.at(row, j));
        Fe piv_inv = field.inv(a.at(row, col));
        for (std::size_t j = col; j < a.cols; ++j) a.at(row, j) = field.mul(a.at(row, j), piv_inv);
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Fe factor = a.at(i, col);
            for (std::size_t j = col; j < a.cols; ++j)
                a.at(i, j) = field.sub(a.at(i, j), field.mul(factor, a.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const PrimeField& field, const MatFq& a) {
    return rref(field, a).second.size();
}

std::optional<AffineSolution> solve_affine(const PrimeField& field, const MatFq& a,
                                           std::span<const Fe> b) {
    if (b.size() != a.rows) throw std::invalid_argument("solve_affine: rhs length");
    MatFq aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto [r, pivots] = rref(field, std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;  // 0 = 1 row

    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    AffineSolution sol;
    sol.particular.assign(a.cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        sol.particular[pivots[i]] = r.at(i, a.cols);

    for (std::size_t c = 0; c < a.cols; ++c)
        if (!is_pivot[c]) sol.free_rows.push_back(c);

    sol.basis = MatFq(a.cols, sol.free_rows.size());
    for (std::size_t j = 0; j < sol.free_rows.size(); ++j) {
        std::size_t fc = sol.free_rows[j];
        sol.basis.at(fc, j) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            sol.basis.at(pivots[i], j) = field.neg(r.at(i, fc));
    }
    return sol;
}

MatFq null_space(const PrimeField& field, const MatFq& a) {
    std::vector<Fe> zero(a.rows, 0);
    auto sol = solve_affine(field, a, zero);
    return sol->basis;  // homogeneous system is always consistent
}

MatFq vandermonde(const PrimeField& field, std::span<const Fe> nodes, std::size_t k) {
    MatFq v(nodes.size(), k);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Fe acc = 1;
        for (std::size_t j = 0; j < k; ++j) {
            v.at(i, j) = acc;
            acc = field.mul(acc, nodes[i]);
        }
    }
    return v;
}

}  // namespace flcc
