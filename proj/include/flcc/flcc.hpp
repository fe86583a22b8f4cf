#ifndef FLCC_FLCC_HPP
#define FLCC_FLCC_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "flcc/frs.hpp"
#include "flcc/linalg.hpp"
#include "flcc/prune.hpp"
#include "flcc/rational.hpp"

namespace flcc {

// ---- Threshold mathematics -------------------------------------------------

// Maximum Byzantine workers tolerated by plain LCC:
// floor((N - (K+T-1)D2 - S - 1)/2). Throws when N < (K+T-1)D2 + S + 1.
std::int64_t lcc_threshold(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                           std::int64_t D2);

// Modified rate r = ((K+T-1/m)D2 + 1)/(N-S), exact.
Rational modified_rate(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                       std::int64_t D2, std::int64_t m);

// a(s) = (s/(s+1))(1 - m r / (m-s+1)).
Rational radius_fraction(std::int64_t m, const Rational& r, std::int64_t s);

struct OptimalS {
    std::int64_t s_star;
    Rational a;  // a(s_star); may be <= 0 when no adversary is tolerable
};

// Integer argmax of a(s) over s in [1, m], found by evaluating a constant
// window of candidates around the continuous maximizer (a is concave in s).
// Ties resolve to the smaller s.
OptimalS optimal_s(std::int64_t m, const Rational& r);

// Adversary count from the published closed-form threshold expression.
std::int64_t flcc_threshold_paper(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                                  std::int64_t D2, std::int64_t m);

// Adversary count certified directly by the radius inequality
// A/(N-S) <= a(s*); this is the simulator's correctness guarantee.
std::int64_t flcc_threshold_exact(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                                  std::int64_t D2, std::int64_t m);

// (s* - 1)/m: master-side side-information work relative to one worker.
Rational normalized_extra_computation(std::int64_t m, std::int64_t s_star);

// ---- Protocol --------------------------------------------------------------

// Entry-wise polynomial job over matrices: every output entry is a
// multivariate polynomial of total degree <= declared_degree in the inputs.
struct PolynomialJob {
    std::string name;
    std::int64_t declared_degree;  // D2
    std::size_t out_rows, out_cols;
    std::function<MatFq(const PrimeField&, const MatFq&)> evaluate;
};

PolynomialJob job_identity(std::size_t rows, std::size_t cols);
PolynomialJob job_entrywise_square(std::size_t rows, std::size_t cols);
PolynomialJob job_xtx(std::size_t rows, std::size_t cols);  // X^T X

struct FlccParams {
    PrimeField field;  // primitive element alpha = field.gamma()
    std::int64_t N, K, T, S, m, D2;
    std::vector<Fe> eval_points;     // E_m: alpha^0 .. alpha^{Nm-1}
    std::vector<Fe> interp_points;   // I_m: next m(K+T) powers, disjoint from E_m

    // Validates every invariant; throws std::invalid_argument naming the
    // violated one.
    FlccParams(PrimeField f, std::int64_t N_, std::int64_t K_, std::int64_t T_, std::int64_t S_,
               std::int64_t m_, std::int64_t D2_);

    std::int64_t composed_degree() const { return (m * (K + T) - 1) * D2; }
    std::size_t decoder_k() const { return static_cast<std::size_t>(composed_degree() + 1); }
    Rational rate() const { return modified_rate(N, K, T, S, D2, m); }
    std::int64_t s_star() const { return optimal_s(m, rate()).s_star; }
};

// One worker's result: m output matrices, or a straggler marker.
struct WorkerReturn {
    std::size_t worker;
    bool straggler = false;
    std::vector<MatFq> mats;  // length m when not straggling
};

class FlccEncoder {
  public:
    // Masks Z_j drawn i.i.d. uniform from the seed (none when T = 0).
    FlccEncoder(const FlccParams& params, std::vector<MatFq> inputs, std::uint64_t mask_seed);

    // Encoding with caller-provided masks; used by privacy audits.
    FlccEncoder(const FlccParams& params, std::vector<MatFq> inputs, std::vector<MatFq> masks);

    // Share of worker i (0-based): u_m at alpha_{mi}, ..., alpha_{m(i+1)-1}.
    std::vector<MatFq> share(std::size_t worker) const;

    // u_m(z) at an arbitrary point, entry-wise; z must avoid no particular set.
    MatFq encode_at(Fe z) const;

    const FlccParams& params() const { return params_; }

  private:
    void build();
    const FlccParams& params_;
    std::vector<MatFq> coded_;   // u_m coefficients per entry: entry_polys_[r][c]
    std::vector<std::vector<Poly>> entry_polys_;
    std::size_t rows_ = 0, cols_ = 0;
};

WorkerReturn worker_compute(std::size_t worker, const std::vector<MatFq>& share,
                            const PolynomialJob& job, const PrimeField& field);

struct DecodeMode {
    bool probabilistic = false;
    std::size_t t = 0;           // probabilistic only
    std::uint64_t seed = 0;      // probabilistic only
    // Off by default. When set, a recovered entry polynomial must agree with
    // at least N - S_e - claimed returned symbols, else the decode is flagged;
    // converts out-of-model silent corruption into a detectable failure.
    std::optional<std::int64_t> verify_claimed_adversaries;
    static DecodeMode deterministic() { return {}; }
    static DecodeMode random(std::size_t t, std::uint64_t seed) { return {true, t, seed}; }
};

struct MasterDecodeResult {
    bool ok = false;                 // false => detected failure
    std::vector<MatFq> outputs;      // g(X_1) .. g(X_{mK}) when ok
    std::size_t max_dimension = 0;   // largest subspace dimension over entries
    std::size_t side_info_evals = 0; // distinct points at which f_m was evaluated
};

// Element-wise FRS decode of the worker returns followed by side-information
// pruning. `side_info` must evaluate f_m = g(u_m(.)) error-free at a point;
// in the protocol this is the master's own extra computation.
MasterDecodeResult master_decode(const FlccParams& params, const PolynomialJob& job,
                                 const std::vector<WorkerReturn>& returns,
                                 const std::function<MatFq(Fe)>& side_info,
                                 const DecodeMode& mode);

}  // namespace flcc

#endif
