// Command-line front end: threshold tables, bound sweeps, Monte Carlo
// campaigns, and FRS round-trip experiments. CSV for sweeps, JSON for
// single-run summaries.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "flcc/rng.hpp"
#include "flcc/sim.hpp"

using json = nlohmann::json;

namespace {

// "a:b[:step]" ranges or comma-separated lists.
std::vector<std::int64_t> parse_grid(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.find(':') != std::string::npos) {
        std::int64_t a = 0, b = 0, step = 1;
        char c1 = 0, c2 = 0;
        std::istringstream in(text);
        in >> a >> c1 >> b;
        if (in >> c2 >> step) {
        }
        if (c1 != ':' || step < 1 || b < a) throw CLI::ValidationError("bad range: " + text);
        for (std::int64_t v = a; v <= b; v += step) out.push_back(v);
    } else {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) out.push_back(std::stoll(tok));
    }
    if (out.empty()) throw CLI::ValidationError("empty grid: " + text);
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

int cmd_simulate(std::uint64_t q, std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                 std::int64_t A, std::int64_t m, std::int64_t D2, const std::string& job,
                 const std::string& mode, std::size_t t, std::uint64_t trials, std::uint64_t seed,
                 const std::string& adversary, const std::string& out_path) {
    flcc::PrimeField field(q);
    flcc::FlccParams params(field, N, K, T, S, m, D2);

    flcc::TrialConfig cfg;
    cfg.N = N; cfg.K = K; cfg.T = T; cfg.S = S; cfg.m = m; cfg.D2 = D2;
    cfg.q = q;
    cfg.job = job;
    cfg.adversary = {flcc::adversary_kind_from_name(adversary), A};
    cfg.probabilistic = mode == "prob";
    cfg.t_points = t;
    if (mode != "det" && mode != "prob") throw CLI::ValidationError("mode must be det or prob");

    flcc::CampaignStats stats = flcc::run_campaign(params, cfg, trials, seed);

    double bound = 1.0;
    if (cfg.probabilistic)
        bound = flcc::bound_ours(q, params.decoder_k(), stats.max_dimension, t);

    json summary = {
        {"trials", stats.trials},
        {"successes", stats.successes},
        {"detected_failures", stats.detected_failures},
        {"silent_errors", stats.silent_errors},
        {"out_of_guarantee", stats.out_of_guarantee},
        {"empirical_rate", stats.empirical_rate()},
        {"theoretical_bound", bound},
        {"side_info_mean", stats.side_info_mean()},
        {"max_dimension", stats.max_dimension},
        {"seed", seed},
    };
    write_output(out_path, summary.dump(2) + "\n");

    const std::int64_t guarantee = flcc::flcc_threshold_exact(N, K, T, S, D2, m);
    if (stats.silent_errors > 0 && A <= guarantee) {
        std::cerr << "SILENT ERRORS WITHIN GUARANTEE: " << stats.silent_errors
                  << " (internal invariant violation)\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Folded Lagrange coded computing toolkit"};
    app.require_subcommand(1);

    // thresholds
    auto* th = app.add_subcommand("thresholds", "LCC/FLCC adversary-threshold table");
    std::int64_t N = 1000, K = 180, T = 11, S = 20, D2 = 2;
    std::string m_spec = "1";
    std::string out_path;
    th->add_option("--N", N)->required();
    th->add_option("--K", K)->required();
    th->add_option("--T", T)->required();
    th->add_option("--S", S)->required();
    th->add_option("--D2", D2)->required();
    th->add_option("--m", m_spec, "folding parameters, list or a:b[:step]")->required();
    th->add_option("--out", out_path, "CSV output path (default stdout)");

    // bounds
    auto* bd = app.add_subcommand("bounds", "success-probability bound sweep");
    std::string which;
    std::uint64_t q = 0, bk = 0, bl = 0, bn = 0;
    std::string t_spec, evals_spec;
    bd->add_option("--which", which, "ours|gr2016|saraf")->required();
    bd->add_option("--q", q);
    bd->add_option("--k", bk);
    bd->add_option("--l", bl);
    bd->add_option("--n", bn);
    bd->add_option("--t", t_spec, "t grid, list or a:b[:step]");
    bd->add_option("--evals", evals_spec, "evaluation-count grid (gr2016)");
    bd->add_option("--out", out_path);

    // simulate
    auto* sm = app.add_subcommand("simulate", "Monte Carlo protocol campaign");
    std::uint64_t sq = 257, strials = 100, sseed = 1;
    std::int64_t sN = 40, sK = 2, sT = 1, sS = 2, sA = 0, sm_ = 4, sD2 = 2;
    std::string sjob = "square", smode = "det", sadv = "uniform_random", config_path;
    std::size_t st = 0;
    sm->add_option("--config", config_path, "JSON config file (overrides flags)");
    sm->add_option("--q", sq);
    sm->add_option("--N", sN);
    sm->add_option("--K", sK);
    sm->add_option("--T", sT);
    sm->add_option("--S", sS);
    sm->add_option("--A", sA);
    sm->add_option("--m", sm_);
    sm->add_option("--D2", sD2);
    sm->add_option("--job", sjob, "identity|square|xtx");
    sm->add_option("--mode", smode, "det|prob");
    sm->add_option("--t", st, "side-info points (prob mode)");
    sm->add_option("--trials", strials);
    sm->add_option("--seed", sseed);
    sm->add_option("--adversary", sadv, "uniform_random|symbol_burst|aliasing");
    sm->add_option("--out", out_path);

    // roundtrip
    auto* rt = app.add_subcommand("roundtrip", "FRS encode/corrupt/decode/prune loop");
    std::uint64_t rq = 257, rtrials = 100, rseed = 1;
    std::size_t rm = 4, rn = 32, rk = 4, rs = 2, rerr = 0, rera = 0, rt_pts = 0;
    bool r_alias = false, r_prob = false;
    rt->add_option("--q", rq)->required();
    rt->add_option("--m", rm)->required();
    rt->add_option("--n", rn)->required();
    rt->add_option("--k", rk)->required();
    rt->add_option("--s", rs)->required();
    rt->add_option("--errors", rerr);
    rt->add_option("--erasures", rera);
    rt->add_option("--trials", rtrials);
    rt->add_option("--seed", rseed);
    rt->add_flag("--aliasing", r_alias, "corrupt with a second valid codeword");
    rt->add_flag("--probabilistic", r_prob, "random side-info points");
    rt->add_option("--t", rt_pts, "side-info points (probabilistic)");
    rt->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (th->parsed()) {
            std::string csv = flcc::sweep_thresholds(N, K, T, S, D2, parse_grid(m_spec));
            write_output(out_path, csv);
            if (!out_path.empty()) std::cout << csv;  // human-readable copy
            return 0;
        }
        if (bd->parsed()) {
            const std::string& grid_spec = which == "gr2016" ? evals_spec : t_spec;
            if (grid_spec.empty())
                throw CLI::ValidationError(which == "gr2016" ? "--evals required" : "--t required");
            std::vector<std::uint64_t> grid;
            for (std::int64_t v : parse_grid(grid_spec)) grid.push_back(static_cast<std::uint64_t>(v));
            write_output(out_path, flcc::sweep_bounds(which, q, bn, bk, bl, grid));
            return 0;
        }
        if (sm->parsed()) {
            if (!config_path.empty()) {
                std::ifstream f(config_path);
                if (!f) throw std::runtime_error("cannot read config: " + config_path);
                json c = json::parse(f);
                sq = c.value("q", sq);
                sN = c.value("N", sN); sK = c.value("K", sK); sT = c.value("T", sT);
                sS = c.value("S", sS); sA = c.value("A", sA); sm_ = c.value("m", sm_);
                sD2 = c.value("D2", sD2);
                sjob = c.value("job", sjob);
                smode = c.value("mode", smode);
                st = c.value("t", st);
                strials = c.value("trials", strials);
                sseed = c.value("seed", sseed);
                sadv = c.value("adversary", sadv);
                out_path = c.value("out", out_path);
            }
            return cmd_simulate(sq, sN, sK, sT, sS, sA, sm_, sD2, sjob, smode, st, strials, sseed,
                                sadv, out_path);
        }
        if (rt->parsed()) {
            flcc::PrimeField field(rq);
            flcc::FrsParams params(field, rn, rm, rk);
            flcc::RoundtripConfig cfg{rq, rn, rm, rk, rs, rerr, rera, r_alias, r_prob, rt_pts};
            std::uint64_t contained = 0, unique = 0;
            bool within = true;
            std::size_t max_dim = 0;
            for (std::uint64_t i = 0; i < rtrials; ++i) {
                flcc::RoundtripReport rep = flcc::run_roundtrip_trial(params, cfg, flcc::mix_seed(rseed, i));
                contained += rep.contained;
                unique += rep.unique;
                within = within && rep.within_radius;
                max_dim = std::max(max_dim, rep.dimension);
            }
            json summary = {
                {"trials", rtrials},
                {"containment_rate", static_cast<double>(contained) / rtrials},
                {"unique_recovery_rate", static_cast<double>(unique) / rtrials},
                {"max_dimension", max_dim},
                {"out_of_guarantee", !within},
                {"seed", rseed},
            };
            write_output(out_path, summary.dump(2) + "\n");
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
