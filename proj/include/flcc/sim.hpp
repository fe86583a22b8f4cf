#ifndef FLCC_SIM_HPP
#define FLCC_SIM_HPP

#include <cstdint>
#include <string>

#include "flcc/flcc.hpp"

namespace flcc {

enum class AdversaryKind { uniform_random, symbol_burst, aliasing };

AdversaryKind adversary_kind_from_name(const std::string& name);
std::string adversary_kind_name(AdversaryKind kind);

struct AdversaryModel {
    AdversaryKind kind = AdversaryKind::uniform_random;
    std::int64_t count = 0;  // A
};

enum class TrialOutcome { success, detected_failure, silent_error, out_of_guarantee };

std::string trial_outcome_name(TrialOutcome o);

struct TrialReport {
    TrialOutcome outcome = TrialOutcome::success;
    std::size_t max_dimension = 0;
    std::size_t side_info_evals = 0;
    std::uint64_t seed = 0;
};

struct TrialConfig {
    std::int64_t N, K, T, S, m, D2;
    std::uint64_t q;
    std::string job;  // identity | square | xtx
    std::size_t data_rows = 2, data_cols = 2;
    AdversaryModel adversary;
    bool probabilistic = false;
    std::size_t t_points = 0;
};

PolynomialJob make_job(const std::string& name, std::size_t rows, std::size_t cols);

// Encodes random data, injects stragglers and adversaries, decodes, and
// compares against the directly computed ground truth.
TrialReport run_trial(const FlccParams& params, const TrialConfig& cfg, std::uint64_t seed);

struct CampaignStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t detected_failures = 0;
    std::uint64_t silent_errors = 0;
    std::uint64_t out_of_guarantee = 0;
    std::uint64_t side_info_total = 0;
    std::size_t max_dimension = 0;

    double empirical_rate() const {
        return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    }
    double side_info_mean() const {
        return trials ? static_cast<double>(side_info_total) / static_cast<double>(trials) : 0.0;
    }
};

CampaignStats run_campaign(const FlccParams& params, const TrialConfig& cfg, std::uint64_t trials,
                           std::uint64_t master_seed);

// ---- FRS-level round trips (no FLCC layer) ---------------------------------

struct RoundtripConfig {
    std::uint64_t q;
    std::size_t n, m, k, s;
    std::size_t errors = 0;
    std::size_t erasures = 0;
    bool aliasing = false;       // corrupt with another valid codeword
    bool probabilistic = false;  // side-info selection mode
    std::size_t t_points = 0;
};

struct RoundtripReport {
    bool contained = false;  // true polynomial inside the decoded subspace
    bool unique = false;     // pruning recovered it exactly
    bool within_radius = false;
    std::size_t dimension = 0;
};

RoundtripReport run_roundtrip_trial(const FrsParams& p, const RoundtripConfig& cfg,
                                    std::uint64_t seed);

// ---- Sweeps ----------------------------------------------------------------

// CSV with a header row; probabilities printed with 6 significant digits.
std::string sweep_bounds(const std::string& which, std::uint64_t q, std::uint64_t n,
                         std::uint64_t k, std::uint64_t l, const std::vector<std::uint64_t>& grid);

std::string sweep_thresholds(std::int64_t N, std::int64_t K, std::int64_t T, std::int64_t S,
                             std::int64_t D2, const std::vector<std::int64_t>& m_list);

std::string format_sig6(double v);

}  // namespace flcc

#endif
