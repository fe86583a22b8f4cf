#include "flcc/poly.hpp"

#include <stdexcept>

namespace flcc {

Fe poly_eval(const PrimeField& field, const Poly& p, Fe x) {
    Fe acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = field.add(field.mul(acc, x), p[i]);
    return acc;
}

std::size_t poly_degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return i;
    return 0;
}

Poly poly_add(const PrimeField& field, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Fe va = i < a.size() ? a[i] : 0;
        Fe vb = i < b.size() ? b[i] : 0;
        out[i] = field.add(va, vb);
    }
    return out;
}

Poly poly_scale(const PrimeField& field, const Poly& p, Fe c) {
    Poly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = field.mul(p[i], c);
    return out;
}

Poly poly_mul(const PrimeField& field, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
    }
    return out;
}

bool poly_equal(const Poly& a, const Poly& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Fe va = i < a.size() ? a[i] : 0;
        Fe vb = i < b.size() ? b[i] : 0;
        if (va != vb) return false;
    }
    return true;
}

Poly lagrange_monomial(const PrimeField& field, std::size_t j, std::span<const Fe> nodes) {
    if (j >= nodes.size()) throw std::out_of_range("lagrange_monomial: node index");
    Poly num = {1};
    Fe den = 1;
    for (std::size_t l = 0; l < nodes.size(); ++l) {
        if (l == j) continue;
        if (nodes[l] == nodes[j]) throw std::invalid_argument("lagrange_monomial: duplicate nodes");
        num = poly_mul(field, num, {field.neg(nodes[l]), 1});  // (X - beta_l)
        den = field.mul(den, field.sub(nodes[j], nodes[l]));
    }
    return poly_scale(field, num, field.inv(den));
}

Poly interpolate(const PrimeField& field, std::span<const std::pair<Fe, Fe>> points) {
    std::vector<Fe> xs;
    xs.reserve(points.size());
    for (const auto& [x, y] : points) xs.push_back(x);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) throw std::invalid_argument("interpolate: duplicate x values");
    Poly acc(points.size(), 0);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].second == 0) continue;
        Poly lj = lagrange_monomial(field, j, xs);
        acc = poly_add(field, acc, poly_scale(field, lj, points[j].second));
    }
    if (acc.empty()) acc = {0};
    return acc;
}

}  // namespace flcc
