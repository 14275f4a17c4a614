#pragma once

#include <Eigen/Dense>

#include "mimosel/correlation.hpp"
#include "mimosel/system_config.hpp"

namespace mimosel {

/// Large-system deterministic equivalents of the ZF link for a given
/// (K, M, delta, rho, P, c, noise). The asymptotic per-user SINR is
/// 1 / (sum_i d_i^alpha * (coeff_a + coeff_b * d_k^{-alpha})).
struct DeterministicEquivalents {
    double phi = 0.0;
    double psi = 0.0;
    double coeff_a = 0.0;  ///< A(K,M) = noise / ((1-rho) P c phi M)
    double coeff_b = 0.0;  ///< B(K,M) = rho/(1-rho) * psi / (M phi^2 - K psi)

    int active_count = 0;   ///< K
    int antenna_count = 0;  ///< M
    double corr_coef = 0.0;
    double est_error = 0.0;
    double tx_power_mw = 0.0;
    double pathloss_ref = 0.0;
    double pathloss_exp = 0.0;
    double noise_mw = 0.0;
};

/// Unique fixed point of
///   phi = (1/M) sum_i lambda_i / (1 + (K/M) lambda_i / phi)
/// over the eigenvalues of R. For the identity model this is exactly
/// 1 - K/M. Fixed-point iteration from phi_0 = 1 with a bisection fallback
/// if the iterates oscillate; throws NoConvergenceError after 1e4 rounds.
double solve_phi(const CorrelationModel& corr, int k_active);

/// psi = (1/M) sum_i lambda_i^2 / (1 + (K/M) lambda_i / phi)^2; exactly
/// phi^2 for the identity model.
double compute_psi(const CorrelationModel& corr, int k_active, double phi);

DeterministicEquivalents deterministic_equivalents(const SystemConfig& cfg,
                                                   const CorrelationModel& corr, int k_active);
DeterministicEquivalents deterministic_equivalents(const SystemConfig& cfg, int k_active);

/// Asymptotic SINR of the k-th active user (0-based) for fixed distances.
double asymptotic_sinr(const DeterministicEquivalents& de, const Eigen::VectorXd& distances,
                       int user_index);

/// Empirical check of the two almost-sure limits behind the equivalents:
/// the power factor gamma^2 and the estimation-error quadratic form, for one
/// fixed distance draw averaged over n_trials small-scale realizations.
struct AppendixReport {
    int antenna_count = 0;
    int active_count = 0;
    int trials = 0;
    int discarded = 0;
    double gamma_sq_mean = 0.0;
    double gamma_sq_limit = 0.0;
    double rel_err_gamma_sq = 0.0;
    double quadform_mean = 0.0;
    double quadform_limit = 0.0;
    double rel_err_quadform = 0.0;
};

AppendixReport validate_appendix(const SystemConfig& cfg, int k_active, int n_trials);

} // namespace mimosel
