#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mimosel/scheme.hpp"
#include "mimosel/selection.hpp"
#include "mimosel/system_config.hpp"

namespace mimosel {

struct SimOptions {
    int threads = 0;           ///< 0 = MIMOSEL_THREADS env or hardware count
    double cond_limit = 1e12;  ///< Gram condition cutoff; beyond it a trial is discarded
    std::optional<SusParams> sus_params;  ///< skip tuning when provided
    std::vector<double> sus_grid;         ///< empty = default 0.05..1.00 grid
    int sus_tune_trials = 400;
};

/// Ergodic sum-rate estimate for one scheme at one operating point.
struct SimulationReport {
    Scheme scheme = Scheme::rus;
    int active_count = 0;  ///< K served (upper bound for SUS)
    int k_star = -1;       ///< populated for the kstar schemes
    std::uint64_t config_fingerprint = 0;
    int trials = 0;
    int discarded = 0;
    double mean_sum_rate = 0.0;  ///< bits/s/Hz
    double std_error = 0.0;
    double ci95_half_width = 0.0;
    bool discard_warning = false;  ///< discards exceeded 0.01% of trials
    double alpha_sus = 0.0;        ///< SUS only
    double mean_active = 0.0;      ///< SUS only: average served count
};

/// Long-term fairness over coherence windows. Candidates are indexed by
/// their distance rank within each window (rank 0 = nearest), which makes
/// the per-candidate averages comparable across windows with independent
/// placements; jfi applies Jain's formula to the window-aggregated vector,
/// and the per-window mean/std of the same index are reported alongside.
struct FairnessReport {
    Scheme scheme = Scheme::rus;
    int windows = 0;
    int slots_per_window = 0;
    int active_count = 0;
    int k_star = -1;
    std::uint64_t config_fingerprint = 0;
    double jfi = 0.0;
    double jfi_window_mean = 0.0;
    double jfi_window_std = 0.0;
    Eigen::VectorXd avg_rate_by_rank;   ///< length N, bits/s/Hz
    Eigen::VectorXd selection_freq;     ///< length N, fraction of slots served
    long long discarded_slots = 0;
    double alpha_sus = 0.0;
};

/// Jain's fairness index (sum x)^2 / (n sum x^2); 0 for an all-zero vector.
double jain_index(const Eigen::VectorXd& x);

/// Resolves the user count a scheme serves: an explicit K wins, the kstar
/// schemes run the offline search, plain rus/lus default to K = M, and SUS
/// reports its cap M (the realized count varies per slot).
int resolve_active_count(const SystemConfig& cfg, Scheme scheme, std::optional<int> k_request);

/// Monte Carlo ergodic sum rate. Per trial: an independent stream derived
/// from (seed, trial index) drives, in order, candidate placement, the
/// scheme's selection, and the active-set channel draw; precoding failures
/// above the condition cutoff discard the trial. Trial outcomes land in a
/// trial-indexed buffer reduced sequentially, so reports are bit-identical
/// for any worker count.
SimulationReport ergodic_rate(const SystemConfig& cfg, Scheme scheme, std::optional<int> k_request,
                              int trials, const SimOptions& opt = {});

/// Fairness evaluation: each window draws one placement (LSF held fixed),
/// then slots_per_window independent small-scale draws; every served
/// candidate is credited its pre-logged per-user rate at its distance rank.
FairnessReport fairness(const SystemConfig& cfg, Scheme scheme, int windows,
                        int slots_per_window, const SimOptions& opt = {});

enum class SweepAxis { power_dbm, candidates, active_count, est_error, corr_coef };

std::string to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(const std::string& name);

/// One (axis point, scheme) result: the deterministic approximation where
/// the scheme family has one, plus the simulated estimate. A failed point
/// records its error and the sweep continues.
struct SweepRow {
    double axis_value = 0.0;
    Scheme scheme = Scheme::rus;
    int k_used = 0;
    int k_star = -1;
    double approx_rate = 0.0;  ///< NaN when no approximation applies
    SimulationReport report;
    std::string error;  ///< empty on success
};

std::vector<SweepRow> sweep(const SystemConfig& cfg, SweepAxis axis,
                            const std::vector<double>& values, const std::vector<Scheme>& schemes,
                            int trials, const SimOptions& opt = {});

} // namespace mimosel
