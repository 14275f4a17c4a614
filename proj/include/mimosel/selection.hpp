#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "mimosel/placement.hpp"
#include "mimosel/rng.hpp"
#include "mimosel/scheme.hpp"
#include "mimosel/system_config.hpp"

namespace mimosel {

/// Result of the offline search for the rate-optimal number of active
/// users. Pure in the configuration: independent of any channel draw.
struct KStarResult {
    Scheme scheme = Scheme::rus;  ///< approximation family, rus or lus
    int k_star = 0;
    std::vector<double> curve;  ///< curve[K-1] = R~(K) for K = 1..curve.size()
    std::uint64_t config_fingerprint = 0;
};

/// Which candidates a scheme serves in the current slot, and the fraction
/// of the slot left for data after pilots (SUS trains all N candidates).
struct SelectionDecision {
    Scheme scheme = Scheme::rus;
    std::vector<int> active_indices;  ///< distinct, in [0, N)
    double pilot_prelog = 0.0;

    int active_count() const { return static_cast<int>(active_indices.size()); }
};

/// Semi-orthogonality threshold for SUS, optionally with the grid the
/// tuning search ran over.
struct SusParams {
    double alpha_sus = 0.3;
    std::vector<double> grid;
};

std::vector<double> default_alpha_grid();  // 0.05, 0.10, ..., 1.00

/// Evaluates the scheme's rate approximation at every admissible K and
/// returns the maximizer (ties broken toward the smallest K).
KStarResult solve_kstar(const SystemConfig& cfg, Scheme family);

/// Uniform random K-subset of [0, N) by partial Fisher-Yates shuffle.
SelectionDecision select_rus(int k_active, int num_candidates, int coherence_symbols,
                             RngStream& rng);

/// The K candidates nearest to the BS; ties broken by candidate index.
SelectionDecision select_lus(int k_active, const UserPlacement& placement,
                             int coherence_symbols);

/// Greedy semi-orthogonal user selection over the estimated candidate
/// channels (N x M): each step picks the candidate with the largest channel
/// component orthogonal to the already-chosen ones, then drops candidates
/// whose direction correlates with the new pick by alpha_sus or more.
SelectionDecision select_sus(const Eigen::MatrixXcd& candidates_est, const SusParams& params,
                             int coherence_symbols, int max_users);

/// Diagnostics of the alpha_sus grid search.
struct SusTuneDiagnostics {
    std::vector<double> mean_rate;
    std::vector<double> std_error;
};

/// Monte Carlo grid search for the sum-rate-maximizing alpha_sus at the
/// given operating point (ties toward the smallest value). Runs on a seed
/// stream derived from cfg.seed, so it never aliases simulation trials.
SusParams tune_alpha_sus(const SystemConfig& cfg, const std::vector<double>& grid, int n_trials,
                         int threads = 0, SusTuneDiagnostics* diagnostics = nullptr);

} // namespace mimosel
