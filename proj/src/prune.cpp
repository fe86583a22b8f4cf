#include "flcc/prune.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "flcc/rational.hpp"
#include "flcc/rng.hpp"

namespace flcc {

SideInfoRequest select_points_deterministic(const PrimeField& field, const DecodeResult& d,
                                            std::size_t k) {
    if (field.q() - 1 < k)
        throw std::invalid_argument("select_points_deterministic: q-1 < k, pool cannot reach rank k");
    SideInfoRequest req;
    if (!d.candidates) return req;
    const MatFq& M = d.candidates->basis;
    const std::size_t l = M.cols;
    if (l == 0) return req;

    // Greedy scan over the pool: keep a node iff its V-row extends the rank of
    // the selected rows of V*M. Guaranteed to find l rows once the pool holds
    // at least k distinct nodes, since rank(V~ M) = rank(M) = l there.
    std::vector<std::vector<Fe>> reduced;  // echelonized selected rows, length l each
    Fe node = 1;  // gamma^0
    for (std::size_t idx = 0; idx < field.q() - 1 && req.points.size() < l; ++idx) {
        // row = (1, node, ..., node^{k-1}) * M
        std::vector<Fe> row(l, 0);
        Fe xp = 1;
        for (std::size_t r = 0; r < M.rows; ++r) {
            for (std::size_t c = 0; c < l; ++c)
                row[c] = field.add(row[c], field.mul(xp, M.at(r, c)));
            xp = field.mul(xp, node);
        }
        // reduce against the rows already kept
        for (const auto& base : reduced) {
            std::size_t lead = 0;
            while (lead < l && base[lead] == 0) ++lead;
            if (lead < l && row[lead] != 0) {
                Fe factor = row[lead];
                for (std::size_t c = 0; c < l; ++c)
                    row[c] = field.sub(row[c], field.mul(factor, base[c]));
            }
        }
        if (std::any_of(row.begin(), row.end(), [](Fe v) { return v != 0; })) {
            std::size_t lead = 0;
            while (row[lead] == 0) ++lead;
            Fe inv = field.inv(row[lead]);
            for (std::size_t c = 0; c < l; ++c) row[c] = field.mul(row[c], inv);
            reduced.push_back(std::move(row));
            req.points.push_back(node);
        }
        node = field.mul(node, field.gamma());
    }
    if (req.points.size() < l)
        throw std::logic_error("select_points_deterministic: pool exhausted before rank l");
    return req;
}

SideInfoRequest select_points_random(const PrimeField& field, std::size_t t, std::uint64_t seed) {
    if (t > field.q() - 1)
        throw std::invalid_argument("select_points_random: t exceeds |F_q*|");
    std::mt19937_64 rng(seed);
    SideInfoRequest req;
    std::unordered_set<Fe> seen;
    while (req.points.size() < t) {
        Fe v = random_nonzero_fe(rng, field);
        if (seen.insert(v).second) req.points.push_back(v);
    }
    return req;
}

PruneOutcome prune(const PrimeField& field, const DecodeResult& d, const SideInfoRequest& req,
                   std::span<const Fe> values, std::size_t k) {
    if (values.size() != req.points.size())
        throw std::invalid_argument("prune: side-information length mismatch");
    if (!d.candidates) return PruneOutcome::detected_failure();
    const AffineSolution& sub = *d.candidates;
    const std::size_t l = sub.dimension();
    if (l == 0) return PruneOutcome::success(sub.particular);

    MatFq V = vandermonde(field, req.points, k);
    MatFq VM = mat_mul(field, V, sub.basis);
    std::vector<Fe> Vz = mat_vec(field, V, sub.particular);
    std::vector<Fe> rhs(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) rhs[i] = field.sub(values[i], Vz[i]);

    auto sol = solve_affine(field, VM, rhs);
    // A rank-deficient system leaves more than one candidate; an inconsistent
    // one means the side information matches no candidate. Both are reported,
    // never guessed. Under error-free side info with the true polynomial in
    // the subspace, inconsistency cannot occur.
    if (!sol || sol->dimension() != 0) return PruneOutcome::detected_failure();
    return PruneOutcome::success(sub.point(field, sol->particular));
}

double bound_ours(std::uint64_t q, std::uint64_t k, std::uint64_t l, std::uint64_t t) {
    BigInt num = 0;
    for (std::uint64_t i = l; i <= t; ++i)
        num += binomial(static_cast<std::int64_t>(q - k + l - 1), static_cast<std::int64_t>(i)) *
               binomial(static_cast<std::int64_t>(k - l), static_cast<std::int64_t>(t - i));
    BigInt den = binomial(static_cast<std::int64_t>(q - 1), static_cast<std::int64_t>(t));
    if (den == 0) return 0.0;
    double p = to_double(Rational(num, den));
    return std::clamp(p, 0.0, 1.0);
}

double bound_gr2016(std::uint64_t q, std::uint64_t k, std::uint64_t num_evals) {
    double p = 1.0 - static_cast<double>(k) * static_cast<double>(num_evals) / static_cast<double>(q);
    return std::clamp(p, 0.0, 1.0);
}

double bound_saraf(std::uint64_t n, std::uint64_t k, std::uint64_t l, std::uint64_t t) {
    if (l < 1 || t < l) throw std::invalid_argument("bound_saraf: need 1 <= l <= t");
    Rational ratio = Rational(k, n);
    Rational pw = 1;
    for (std::uint64_t i = 0; i < t - l + 1; ++i) pw *= ratio;
    Rational p = 1 - Rational(binomial(static_cast<std::int64_t>(t), static_cast<std::int64_t>(l - 1))) * pw;
    return std::clamp(to_double(p), 0.0, 1.0);
}

}  // namespace flcc
