#include "flcc/flcc.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "flcc/rng.hpp"

namespace flcc {

// ---- Threshold mathematics -------------------------------------------------

std::int64_t lcc_threshold(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                           std::int64_t D2) {
    const std::int64_t need = (K + T - 1) * D2 + S + 1;
    if (N < need) throw std::invalid_argument("lcc_threshold: N < (K+T-1)D2 + S + 1");
    return (N - (K + T - 1) * D2 - S - 1) / 2;
}

Rational modified_rate(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                       std::int64_t D2, std::int64_t m) {
    if (N <= S) throw std::invalid_argument("modified_rate: N must exceed S");
    // ((K+T-1/m)D2 + 1)/(N-S) cleared of the 1/m term
    return Rational((m * (K + T) - 1) * D2 + m, m * (N - S));
}

Rational radius_fraction(std::int64_t m, const Rational& r, std::int64_t s) {
    return Rational(s, s + 1) * (1 - Rational(m) * r / Rational(m - s + 1));
}

OptimalS optimal_s(std::int64_t m, const Rational& r) {
    if (m < 1 || r <= 0) throw std::invalid_argument("optimal_s: need m >= 1 and r > 0");
    const double rd = to_double(r);
    // Root of d a(s)/ds = 0, written in the cancellation-free form
    // (m+1)(m+1-mr)/(sqrt(disc)+m+1); the textbook (sqrt(disc)-(m+1))/(mr-1)
    // is 0/0 at mr = 1.
    const double disc = static_cast<double>(m) * (m + 1) * (m * (1.0 - rd) + 2.0) * rd;
    double s_tilde = (m + 1) * (m + 1 - static_cast<double>(m) * rd) /
                     (std::sqrt(std::max(disc, 0.0)) + (m + 1));
    if (!(s_tilde >= 1.0)) s_tilde = 1.0;
    if (s_tilde > static_cast<double>(m)) s_tilde = static_cast<double>(m);

    // a(s) is concave in s, so the integer argmax is adjacent to the continuous
    // one; a +/-1 window absorbs floating-point slack in s_tilde.
    const std::int64_t center = static_cast<std::int64_t>(std::ceil(s_tilde));
    OptimalS best{0, 0};
    bool have = false;
    for (std::int64_t s = center - 2; s <= center + 2; ++s) {
        if (s < 1 || s > m) continue;
        Rational a = radius_fraction(m, r, s);
        if (!have || a > best.a) {
            best = {s, a};
            have = true;
        }
    }
    assert(have);
    return best;
}

std::int64_t flcc_threshold_paper(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                                  std::int64_t D2, std::int64_t m) {
    lcc_threshold(N, K, T, S, D2);  // same precondition
    const std::int64_t s = optimal_s(m, modified_rate(N, K, T, S, D2, m)).s_star;
    // mD2(K+T-1/m) = D2(m(K+T)-1)
    Rational inner = Rational(N) - Rational(D2 * (m * (K + T) - 1), m - s + 1) - S - 1;
    return floor_clamp0(Rational(s, s + 1) * inner);
}

std::int64_t flcc_threshold_exact(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                                  std::int64_t D2, std::int64_t m) {
    lcc_threshold(N, K, T, S, D2);
    OptimalS opt = optimal_s(m, modified_rate(N, K, T, S, D2, m));
    return floor_clamp0(opt.a * Rational(N - S));
}

Rational normalized_extra_computation(std::int64_t m, std::int64_t s_star) {
    if (s_star < 1 || s_star > m) throw std::invalid_argument("normalized_extra_computation: s out of [1,m]");
    return Rational(s_star - 1, m);
}

// ---- Jobs ------------------------------------------------------------------

PolynomialJob job_identity(std::size_t rows, std::size_t cols) {
    return {"identity", 1, rows, cols,
            [](const PrimeField&, const MatFq& x) { return x; }};
}

PolynomialJob job_entrywise_square(std::size_t rows, std::size_t cols) {
    return {"square", 2, rows, cols, [](const PrimeField& f, const MatFq& x) {
                MatFq y(x.rows, x.cols);
                for (std::size_t i = 0; i < x.data.size(); ++i) y.data[i] = f.mul(x.data[i], x.data[i]);
                return y;
            }};
}

PolynomialJob job_xtx(std::size_t rows, std::size_t cols) {
    return {"xtx", 2, cols, cols, [](const PrimeField& f, const MatFq& x) {
                MatFq y(x.cols, x.cols);
                for (std::size_t i = 0; i < x.cols; ++i)
                    for (std::size_t j = 0; j < x.cols; ++j) {
                        Fe acc = 0;
                        for (std::size_t r = 0; r < x.rows; ++r)
                            acc = f.add(acc, f.mul(x.at(r, i), x.at(r, j)));
                        y.at(i, j) = acc;
                    }
                return y;
            }};
}

// ---- Parameters ------------------------------------------------------------

FlccParams::FlccParams(PrimeField f, std::int64_t N_, std::int64_t K_, std::int64_t T_,
                       std::int64_t S_, std::int64_t m_, std::int64_t D2_)
    : field(f), N(N_), K(K_), T(T_), S(S_), m(m_), D2(D2_) {
    if (N < 1 || K < 1 || m < 1 || D2 < 1 || T < 0 || S < 0)
        throw std::invalid_argument("FlccParams: N,K,m,D2 >= 1 and T,S >= 0 required");
    if (S >= N) throw std::invalid_argument("FlccParams: S must be smaller than N");
    const std::uint64_t nm = static_cast<std::uint64_t>(N) * m;
    const std::uint64_t ikt = static_cast<std::uint64_t>(m) * (K + T);
    if (field.q() - 1 < nm)
        throw std::invalid_argument("FlccParams: q-1 < N*m, not enough evaluation points");
    if (field.q() <= nm + ikt)
        throw std::invalid_argument("FlccParams: q <= N*m + m(K+T), E_m and I_m cannot be disjoint");
    if (composed_degree() >= static_cast<std::int64_t>(nm))
        throw std::invalid_argument("FlccParams: composed degree (m(K+T)-1)D2 must be < N*m");

    eval_points.reserve(nm);
    Fe pt = 1;
    std::unordered_set<Fe> in_eval;
    for (std::uint64_t i = 0; i < nm; ++i) {
        eval_points.push_back(pt);
        in_eval.insert(pt);
        pt = field.mul(pt, field.gamma());
    }
    // I_m: the next powers of alpha, skipping any wraparound collision with E_m.
    interp_points.reserve(ikt);
    while (interp_points.size() < ikt) {
        if (!in_eval.count(pt)) interp_points.push_back(pt);
        pt = field.mul(pt, field.gamma());
    }
}

// ---- Encoder ---------------------------------------------------------------

FlccEncoder::FlccEncoder(const FlccParams& params, std::vector<MatFq> inputs,
                         std::uint64_t mask_seed)
    : params_(params) {
    const std::size_t mk = static_cast<std::size_t>(params.m * params.K);
    const std::size_t mt = static_cast<std::size_t>(params.m * params.T);
    if (inputs.size() != mk) throw std::invalid_argument("FlccEncoder: expected mK input matrices");
    rows_ = inputs.empty() ? 0 : inputs[0].rows;
    cols_ = inputs.empty() ? 0 : inputs[0].cols;
    std::mt19937_64 rng(mask_seed);
    std::vector<MatFq> masks(mt, MatFq(rows_, cols_));
    for (auto& z : masks)
        for (auto& v : z.data) v = random_fe(rng, params.field);
    coded_ = std::move(inputs);
    coded_.insert(coded_.end(), masks.begin(), masks.end());
    build();
}

FlccEncoder::FlccEncoder(const FlccParams& params, std::vector<MatFq> inputs,
                         std::vector<MatFq> masks)
    : params_(params) {
    if (inputs.size() != static_cast<std::size_t>(params.m * params.K) ||
        masks.size() != static_cast<std::size_t>(params.m * params.T))
        throw std::invalid_argument("FlccEncoder: need mK inputs and mT masks");
    rows_ = inputs.empty() ? 0 : inputs[0].rows;
    cols_ = inputs.empty() ? 0 : inputs[0].cols;
    coded_ = std::move(inputs);
    coded_.insert(coded_.end(), masks.begin(), masks.end());
    build();
}

void FlccEncoder::build() {
    const std::size_t d = params_.interp_points.size();
    for (const auto& mat : coded_)
        if (mat.rows != rows_ || mat.cols != cols_)
            throw std::invalid_argument("FlccEncoder: matrix shapes must be uniform");
    entry_polys_.assign(rows_, std::vector<Poly>(cols_));
    std::vector<std::pair<Fe, Fe>> pts(d);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            for (std::size_t j = 0; j < d; ++j)
                pts[j] = {params_.interp_points[j], coded_[j].at(r, c)};
            entry_polys_[r][c] = interpolate(params_.field, pts);
        }
    }
}

std::vector<MatFq> FlccEncoder::share(std::size_t worker) const {
    if (worker >= static_cast<std::size_t>(params_.N))
        throw std::out_of_range("FlccEncoder::share: worker index");
    std::vector<MatFq> out;
    out.reserve(params_.m);
    for (std::int64_t t = 0; t < params_.m; ++t)
        out.push_back(encode_at(params_.eval_points[worker * params_.m + t]));
    return out;
}

MatFq FlccEncoder::encode_at(Fe z) const {
    MatFq out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.at(r, c) = poly_eval(params_.field, entry_polys_[r][c], z);
    return out;
}

// ---- Worker ----------------------------------------------------------------

WorkerReturn worker_compute(std::size_t worker, const std::vector<MatFq>& share,
                            const PolynomialJob& job, const PrimeField& field) {
    WorkerReturn ret;
    ret.worker = worker;
    ret.mats.reserve(share.size());
    for (const auto& x : share) ret.mats.push_back(job.evaluate(field, x));
    return ret;
}

// ---- Master decode ---------------------------------------------------------

MasterDecodeResult master_decode(const FlccParams& params, const PolynomialJob& job,
                                 const std::vector<WorkerReturn>& returns,
                                 const std::function<MatFq(Fe)>& side_info,
                                 const DecodeMode& mode) {
    const PrimeField& F = params.field;
    if (returns.size() != static_cast<std::size_t>(params.N))
        throw std::invalid_argument("master_decode: one return per worker expected");

    const std::size_t k = params.decoder_k();
    const std::size_t N = static_cast<std::size_t>(params.N);
    const std::size_t m = static_cast<std::size_t>(params.m);
    FrsParams frs(F, N * m, m, k);
    const std::size_t s = static_cast<std::size_t>(params.s_star());

    MasterDecodeResult res;

    // Element-wise list decode.
    std::vector<std::vector<DecodeResult>> decoded(job.out_rows,
                                                   std::vector<DecodeResult>(job.out_cols));
    for (std::size_t a = 0; a < job.out_rows; ++a) {
        for (std::size_t b = 0; b < job.out_cols; ++b) {
            FrsCodeword y;
            y.symbols.assign(N, std::vector<Fe>(m, 0));
            y.erased.assign(N, false);
            for (std::size_t i = 0; i < N; ++i) {
                if (returns[i].straggler) {
                    y.erased[i] = true;
                    continue;
                }
                for (std::size_t t = 0; t < m; ++t) y.symbols[i][t] = returns[i].mats[t].at(a, b);
            }
            decoded[a][b] = list_decode(frs, y, s);
            res.max_dimension = std::max(res.max_dimension, decoded[a][b].dimension());
        }
    }

    // Side-information point set. Deterministic mode unions the per-entry
    // requests; one f_m evaluation per distinct point serves every entry.
    std::vector<Fe> lambda_order;
    std::unordered_map<Fe, std::size_t> lambda_index;
    std::vector<std::vector<SideInfoRequest>> requests(job.out_rows,
                                                       std::vector<SideInfoRequest>(job.out_cols));
    if (mode.probabilistic) {
        SideInfoRequest req = select_points_random(F, mode.t, mode.seed);
        for (Fe p : req.points) {
            lambda_index.emplace(p, lambda_order.size());
            lambda_order.push_back(p);
        }
        for (auto& row : requests)
            for (auto& r : row) r = req;
    } else {
        for (std::size_t a = 0; a < job.out_rows; ++a)
            for (std::size_t b = 0; b < job.out_cols; ++b) {
                requests[a][b] = select_points_deterministic(F, decoded[a][b], k);
                for (Fe p : requests[a][b].points)
                    if (lambda_index.emplace(p, lambda_order.size()).second)
                        lambda_order.push_back(p);
            }
    }

    std::vector<MatFq> f_at_lambda;
    f_at_lambda.reserve(lambda_order.size());
    for (Fe p : lambda_order) f_at_lambda.push_back(side_info(p));
    res.side_info_evals = lambda_order.size();

    // Prune every entry; any failure fails the whole decode, no partial output.
    std::vector<std::vector<Poly>> recovered(job.out_rows, std::vector<Poly>(job.out_cols));
    for (std::size_t a = 0; a < job.out_rows; ++a) {
        for (std::size_t b = 0; b < job.out_cols; ++b) {
            const auto& req = requests[a][b];
            std::vector<Fe> values(req.points.size());
            for (std::size_t i = 0; i < req.points.size(); ++i)
                values[i] = f_at_lambda[lambda_index.at(req.points[i])].at(a, b);
            PruneOutcome out = prune(F, decoded[a][b], req, values, k);
            if (!out.unique) return res;  // ok stays false
            recovered[a][b] = std::move(out.f);
        }
    }

    if (mode.verify_claimed_adversaries) {
        std::size_t non_erased = 0;
        for (const auto& r : returns) non_erased += !r.straggler;
        const std::int64_t need = static_cast<std::int64_t>(non_erased) - *mode.verify_claimed_adversaries;
        for (std::size_t a = 0; a < job.out_rows; ++a)
            for (std::size_t b = 0; b < job.out_cols; ++b) {
                std::int64_t agree = 0;
                for (std::size_t i = 0; i < N; ++i) {
                    if (returns[i].straggler) continue;
                    bool match = true;
                    for (std::size_t t = 0; t < m && match; ++t)
                        match = returns[i].mats[t].at(a, b) ==
                                poly_eval(F, recovered[a][b], params.eval_points[i * m + t]);
                    agree += match;
                }
                if (agree < need) return res;  // flagged, ok stays false
            }
    }

    // Read off g(X_j) = f_m(beta_j) for j in [mK].
    const std::size_t mk = static_cast<std::size_t>(params.m * params.K);
    res.outputs.reserve(mk);
    for (std::size_t j = 0; j < mk; ++j) {
        MatFq out(job.out_rows, job.out_cols);
        for (std::size_t a = 0; a < job.out_rows; ++a)
            for (std::size_t b = 0; b < job.out_cols; ++b)
                out.at(a, b) = poly_eval(F, recovered[a][b], params.interp_points[j]);
        res.outputs.push_back(std::move(out));
    }
    res.ok = true;
    return res;
}

}  // namespace flcc
