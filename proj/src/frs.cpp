#include "flcc/frs.hpp"

#include <cassert>
#include <stdexcept>

namespace flcc {

FrsParams::FrsParams(PrimeField f, std::size_t n_, std::size_t m_, std::size_t k_)
    : field(f), n(n_), m(m_), k(k_) {
    if (m == 0 || n == 0 || n % m != 0) throw std::invalid_argument("FrsParams: m must divide n");
    if (n > field.q() - 1) throw std::invalid_argument("FrsParams: n exceeds q-1");
    if (k == 0 || k >= n) throw std::invalid_argument("FrsParams: need 1 <= k < n");
}

std::size_t FrsCodeword::erased_count() const {
    std::size_t c = 0;
    for (bool e : erased) c += e;
    return c;
}

bool DecodeResult::contains(const PrimeField& field, const Poly& f, std::size_t k) const {
    if (!candidates) return false;
    std::vector<Fe> coeffs(k, 0);
    for (std::size_t i = 0; i < f.size() && i < k; ++i) coeffs[i] = f[i];
    for (std::size_t i = k; i < f.size(); ++i)
        if (f[i] != 0) return false;
    return candidates->contains(field, coeffs);
}

FrsCodeword frs_encode(const FrsParams& p, const Poly& f) {
    if (poly_degree(f) >= p.k) throw std::invalid_argument("frs_encode: degree too large");
    const std::size_t N = p.block_length();
    FrsCodeword cw;
    cw.symbols.assign(N, std::vector<Fe>(p.m));
    cw.erased.assign(N, false);
    Fe point = 1;  // gamma^0
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t t = 0; t < p.m; ++t) {
            cw.symbols[j][t] = poly_eval(p.field, f, point);
            point = p.field.mul(point, p.field.gamma());
        }
    }
    return cw;
}

DecodingRadius decoding_radius(const FrsParams& p, std::size_t s, std::size_t erasures) {
    if (s < 1 || s > p.m) throw std::invalid_argument("decoding_radius: s out of range");
    const std::size_t N = p.block_length();
    Rational frac = Rational(s, s + 1) * (1 - Rational(p.m) * p.rate() / Rational(p.m - s + 1));
    std::int64_t avail = static_cast<std::int64_t>(N) - static_cast<std::int64_t>(erasures);
    std::int64_t syms = frac <= 0 || avail <= 0 ? 0 : floor_clamp0(frac * avail);
    return {frac, syms};
}

DecodeResult list_decode(const FrsParams& p, const FrsCodeword& y, std::size_t s) {
    const PrimeField& F = p.field;
    const std::size_t N = p.block_length();
    if (s < 1 || s > p.m) throw std::invalid_argument("list_decode: s out of range");
    if (y.symbols.size() != N || y.erased.size() != N)
        throw std::invalid_argument("list_decode: codeword length mismatch");

    const std::size_t Se = y.erased_count();
    const std::int64_t Dnum =
        static_cast<std::int64_t>((N - Se) * (p.m - s + 1)) - static_cast<std::int64_t>(p.k) + 1;
    const std::int64_t D = Dnum >= 0 ? Dnum / static_cast<std::int64_t>(s + 1) : -1;
    if (D < 0) throw std::invalid_argument("list_decode: degree parameter negative, decoding impossible");

    // Unknown layout: A_0 has D+k coefficients, then A_1..A_s with D+1 each.
    const std::size_t a0_len = static_cast<std::size_t>(D) + p.k;
    const std::size_t ai_len = static_cast<std::size_t>(D) + 1;
    const std::size_t unknowns = a0_len + s * ai_len;
    const std::size_t conditions = (N - Se) * (p.m - s + 1);
    assert(unknowns > conditions);

    MatFq sys(conditions, unknowns);
    std::size_t row = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (y.erased[i]) continue;
        for (std::size_t j = 0; j + s <= p.m; ++j) {
            const Fe x = F.pow(F.gamma(), i * p.m + j);
            Fe xp = 1;
            for (std::size_t e = 0; e < a0_len; ++e) {
                sys.at(row, e) = xp;
                xp = F.mul(xp, x);
            }
            for (std::size_t t = 0; t < s; ++t) {
                const Fe yv = y.symbols[i][j + t];
                Fe xq = 1;
                for (std::size_t e = 0; e < ai_len; ++e) {
                    sys.at(row, a0_len + t * ai_len + e) = F.mul(xq, yv);
                    xq = F.mul(xq, x);
                }
            }
            ++row;
        }
    }
    assert(row == conditions);

    MatFq ns = null_space(F, sys);
    assert(ns.cols > 0);  // unknowns exceed conditions
    // First free variable set to 1, rest 0: take the first null-space column.
    std::vector<Fe> Q(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i) Q[i] = ns.at(i, 0);

    // Normalize: while every A_i has zero constant term, divide Q by X.
    // Interpolation points are nonzero, so the shifted Q still satisfies all
    // conditions, and some block gains a nonzero constant term. This keeps the
    // coefficient matrix below effectively triangular with diagonal entries
    // B(gamma^b) for a nonzero B of degree < s, pinning the dimension bound.
    auto all_consts_zero = [&] {
        if (Q[0] != 0) return false;
        for (std::size_t t = 0; t < s; ++t)
            if (Q[a0_len + t * ai_len] != 0) return false;
        return true;
    };
    while (all_consts_zero()) {
        for (std::size_t e = 0; e + 1 < a0_len; ++e) Q[e] = Q[e + 1];
        Q[a0_len - 1] = 0;
        for (std::size_t t = 0; t < s; ++t) {
            const std::size_t base = a0_len + t * ai_len;
            for (std::size_t e = 0; e + 1 < ai_len; ++e) Q[base + e] = Q[base + e + 1];
            Q[base + ai_len - 1] = 0;
        }
    }

    // Expand A_0(X) + sum_{i in [s]} A_i(X) f(gamma^{i-1} X) = 0 power by
    // power: D+k equations in the k coefficients of f.
    MatFq C(a0_len, p.k);
    std::vector<Fe> rhs(a0_len);
    for (std::size_t pw = 0; pw < a0_len; ++pw) rhs[pw] = F.neg(Q[pw]);
    for (std::size_t t = 0; t < s; ++t) {
        // gamma^{t*b} multiplies f_b when Y_{t+1} = f(gamma^t X)
        Fe g_tb = 1;
        const Fe g_t = F.pow(F.gamma(), t);
        for (std::size_t b = 0; b < p.k; ++b) {
            for (std::size_t a = 0; a < ai_len; ++a) {
                const std::size_t pw = a + b;
                if (pw >= a0_len) break;
                const Fe coef = F.mul(Q[a0_len + t * ai_len + a], g_tb);
                C.at(pw, b) = F.add(C.at(pw, b), coef);
            }
            g_tb = F.mul(g_tb, g_t);
        }
    }

    DecodeResult res;
    res.s_used = s;
    res.candidates = solve_affine(F, C, rhs);
    if (res.candidates) assert(res.candidates->dimension() <= s - 1);
    return res;
}

}  // namespace flcc
