#include "flcc/sim.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flcc/rng.hpp"

namespace flcc {

AdversaryKind adversary_kind_from_name(const std::string& name) {
    if (name == "uniform_random") return AdversaryKind::uniform_random;
    if (name == "symbol_burst") return AdversaryKind::symbol_burst;
    if (name == "aliasing") return AdversaryKind::aliasing;
    throw std::invalid_argument("unknown adversary model: " + name);
}

std::string adversary_kind_name(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::uniform_random: return "uniform_random";
        case AdversaryKind::symbol_burst: return "symbol_burst";
        case AdversaryKind::aliasing: return "aliasing";
    }
    return "?";
}

std::string trial_outcome_name(TrialOutcome o) {
    switch (o) {
        case TrialOutcome::success: return "success";
        case TrialOutcome::detected_failure: return "detected_failure";
        case TrialOutcome::silent_error: return "silent_error";
        case TrialOutcome::out_of_guarantee: return "out_of_guarantee";
    }
    return "?";
}

PolynomialJob make_job(const std::string& name, std::size_t rows, std::size_t cols) {
    if (name == "identity") return job_identity(rows, cols);
    if (name == "square") return job_entrywise_square(rows, cols);
    if (name == "xtx") return job_xtx(rows, cols);
    throw std::invalid_argument("unknown job: " + name);
}

namespace {

// Sample `count` distinct indices from [0, n) \ excluded.
std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t n, std::size_t count,
                                        const std::vector<bool>& excluded) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < n; ++i)
        if (!excluded[i]) pool.push_back(i);
    if (count > pool.size()) throw std::invalid_argument("sample_indices: not enough candidates");
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + uniform_below(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

MatFq random_matrix(std::mt19937_64& rng, const PrimeField& f, std::size_t r, std::size_t c) {
    MatFq m(r, c);
    for (auto& v : m.data) v = random_fe(rng, f);
    return m;
}

}  // namespace

TrialReport run_trial(const FlccParams& params, const TrialConfig& cfg, std::uint64_t seed) {
    const PrimeField& F = params.field;
    std::mt19937_64 rng(seed);
    TrialReport report;
    report.seed = seed;

    PolynomialJob job = make_job(cfg.job, cfg.data_rows, cfg.data_cols);
    const std::size_t mk = static_cast<std::size_t>(params.m * params.K);

    std::vector<MatFq> inputs;
    inputs.reserve(mk);
    for (std::size_t i = 0; i < mk; ++i)
        inputs.push_back(random_matrix(rng, F, cfg.data_rows, cfg.data_cols));

    FlccEncoder encoder(params, inputs, rng());

    std::vector<bool> straggler(params.N, false);
    for (std::size_t i : sample_indices(rng, params.N, static_cast<std::size_t>(params.S),
                                        std::vector<bool>(params.N, false)))
        straggler[i] = true;
    std::vector<std::size_t> corrupt =
        sample_indices(rng, params.N, static_cast<std::size_t>(cfg.adversary.count), straggler);
    std::vector<bool> is_corrupt(params.N, false);
    for (std::size_t i : corrupt) is_corrupt[i] = true;

    // Aliasing adversaries report a different valid encoding polynomial's
    // computation; built once per trial.
    std::optional<FlccEncoder> alias_encoder;
    if (cfg.adversary.kind == AdversaryKind::aliasing && !corrupt.empty()) {
        std::vector<MatFq> fake;
        fake.reserve(mk);
        for (std::size_t i = 0; i < mk; ++i)
            fake.push_back(random_matrix(rng, F, cfg.data_rows, cfg.data_cols));
        alias_encoder.emplace(params, std::move(fake), rng());
    }

    std::vector<WorkerReturn> returns(params.N);
    for (std::int64_t w = 0; w < params.N; ++w) {
        if (straggler[w]) {
            returns[w] = {static_cast<std::size_t>(w), true, {}};
            continue;
        }
        returns[w] = worker_compute(static_cast<std::size_t>(w), encoder.share(w), job, F);
        if (!is_corrupt[w]) continue;
        switch (cfg.adversary.kind) {
            case AdversaryKind::uniform_random:
                for (auto& mat : returns[w].mats)
                    for (auto& v : mat.data) v = random_fe(rng, F);
                break;
            case AdversaryKind::symbol_burst: {
                // one slot of the m-stack corrupted, shifted by a nonzero delta
                std::size_t slot = uniform_below(rng, params.m);
                for (auto& v : returns[w].mats[slot].data)
                    v = F.add(v, random_nonzero_fe(rng, F));
                break;
            }
            case AdversaryKind::aliasing:
                returns[w] = worker_compute(static_cast<std::size_t>(w), alias_encoder->share(w), job, F);
                break;
        }
    }

    DecodeMode mode =
        cfg.probabilistic ? DecodeMode::random(cfg.t_points, rng()) : DecodeMode::deterministic();
    auto side_info = [&](Fe z) { return job.evaluate(F, encoder.encode_at(z)); };
    MasterDecodeResult dec = master_decode(params, job, returns, side_info, mode);

    report.max_dimension = dec.max_dimension;
    report.side_info_evals = dec.side_info_evals;

    const bool within = cfg.adversary.count <=
                        flcc_threshold_exact(params.N, params.K, params.T, params.S, params.D2, params.m);
    if (!dec.ok) {
        report.outcome = within ? TrialOutcome::detected_failure : TrialOutcome::out_of_guarantee;
        return report;
    }
    bool exact = true;
    for (std::size_t j = 0; j < mk && exact; ++j) {
        MatFq truth = job.evaluate(F, inputs[j]);
        exact = truth.data == dec.outputs[j].data;
    }
    if (exact) {
        report.outcome = TrialOutcome::success;
    } else {
        report.outcome = within ? TrialOutcome::silent_error : TrialOutcome::out_of_guarantee;
    }
    return report;
}

CampaignStats run_campaign(const FlccParams& params, const TrialConfig& cfg, std::uint64_t trials,
                           std::uint64_t master_seed) {
    if (trials < 1) throw std::invalid_argument("run_campaign: trials >= 1 required");
    CampaignStats stats;
    for (std::uint64_t i = 0; i < trials; ++i) {
        TrialReport r = run_trial(params, cfg, mix_seed(master_seed, i));
        ++stats.trials;
        switch (r.outcome) {
            case TrialOutcome::success: ++stats.successes; break;
            case TrialOutcome::detected_failure: ++stats.detected_failures; break;
            case TrialOutcome::silent_error: ++stats.silent_errors; break;
            case TrialOutcome::out_of_guarantee: ++stats.out_of_guarantee; break;
        }
        stats.side_info_total += r.side_info_evals;
        stats.max_dimension = std::max(stats.max_dimension, r.max_dimension);
    }
    return stats;
}

RoundtripReport run_roundtrip_trial(const FrsParams& p, const RoundtripConfig& cfg,
                                    std::uint64_t seed) {
    const PrimeField& F = p.field;
    std::mt19937_64 rng(seed);
    const std::size_t N = p.block_length();
    if (cfg.errors + cfg.erasures > N)
        throw std::invalid_argument("run_roundtrip_trial: errors + erasures exceed block length");

    Poly f(p.k);
    for (auto& c : f) c = random_fe(rng, F);
    FrsCodeword y = frs_encode(p, f);

    std::vector<bool> touched(N, false);
    for (std::size_t i : sample_indices(rng, N, cfg.erasures, std::vector<bool>(N, false))) {
        y.erased[i] = true;
        touched[i] = true;
    }
    std::vector<std::size_t> bad = sample_indices(rng, N, cfg.errors, touched);

    std::optional<FrsCodeword> alias;
    if (cfg.aliasing) {
        Poly f2(p.k);
        do {
            for (auto& c : f2) c = random_fe(rng, F);
        } while (poly_equal(f2, f));
        alias = frs_encode(p, f2);
    }
    for (std::size_t i : bad) {
        if (alias) {
            y.symbols[i] = alias->symbols[i];
        } else {
            auto original = y.symbols[i];
            do {
                for (auto& v : y.symbols[i]) v = random_fe(rng, F);
            } while (y.symbols[i] == original);
        }
    }

    RoundtripReport rep;
    rep.within_radius = static_cast<std::int64_t>(cfg.errors) <=
                        decoding_radius(p, cfg.s, cfg.erasures).symbols;

    DecodeResult d = list_decode(p, y, cfg.s);
    rep.dimension = d.dimension();
    rep.contained = d.contains(F, f, p.k);

    SideInfoRequest req = cfg.probabilistic
                              ? select_points_random(F, cfg.t_points, rng())
                              : select_points_deterministic(F, d, p.k);
    std::vector<Fe> values(req.points.size());
    for (std::size_t i = 0; i < req.points.size(); ++i)
        values[i] = poly_eval(F, f, req.points[i]);  // error-free side information
    PruneOutcome out = prune(F, d, req, values, p.k);
    rep.unique = out.unique && poly_equal(out.f, f);
    return rep;
}

std::string format_sig6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string sweep_bounds(const std::string& which, std::uint64_t q, std::uint64_t n,
                         std::uint64_t k, std::uint64_t l, const std::vector<std::uint64_t>& grid) {
    std::ostringstream out;
    if (which == "ours") {
        out << "q,k,l,t,bound\n";
        for (std::uint64_t t : grid)
            out << q << ',' << k << ',' << l << ',' << t << ',' << format_sig6(bound_ours(q, k, l, t))
                << '\n';
    } else if (which == "gr2016") {
        out << "q,k,evals,bound\n";
        for (std::uint64_t e : grid)
            out << q << ',' << k << ',' << e << ',' << format_sig6(bound_gr2016(q, k, e)) << '\n';
    } else if (which == "saraf") {
        out << "n,k,l,t,bound\n";
        for (std::uint64_t t : grid)
            out << n << ',' << k << ',' << l << ',' << t << ',' << format_sig6(bound_saraf(n, k, l, t))
                << '\n';
    } else {
        throw std::invalid_argument("sweep_bounds: which must be ours|gr2016|saraf");
    }
    return out.str();
}

std::string sweep_thresholds(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                             std::int64_t D2, const std::vector<std::int64_t>& m_list) {
    std::ostringstream out;
    out << "m,s_star,a_s_star,A_lcc,A_flcc_paper,A_flcc_exact,ratio_paper,extra_computation\n";
    const std::int64_t a_lcc = lcc_threshold(N, K, T, S, D2);
    for (std::int64_t m : m_list) {
        OptimalS opt = optimal_s(m, modified_rate(N, K, T, S, D2, m));
        const std::int64_t paper = flcc_threshold_paper(N, K, T, S, D2, m);
        const std::int64_t exact = flcc_threshold_exact(N, K, T, S, D2, m);
        out << m << ',' << opt.s_star << ',' << format_sig6(to_double(opt.a)) << ',' << a_lcc << ','
            << paper << ',' << exact << ','
            << format_sig6(static_cast<double>(paper) / static_cast<double>(a_lcc)) << ','
            << format_sig6(to_double(normalized_extra_computation(m, opt.s_star))) << '\n';
    }
    return out.str();
}

}  // namespace flcc
