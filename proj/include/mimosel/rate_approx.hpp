#pragma once

#include <vector>

#include "mimosel/scheme.hpp"
#include "mimosel/system_config.hpp"

namespace mimosel {

/// Which route supplies the order-statistic distance moments inside the
/// LUS approximation. The hypergeometric identity is the production path;
/// quadrature of the density is the verification path.
enum class MomentPath { hypergeometric, quadrature };

/// One deterministic ergodic-sum-rate approximation value R~(K).
struct RateApproximation {
    Scheme scheme = Scheme::rus;  ///< rus or lus family
    int active_count = 0;         ///< K
    double value = 0.0;           ///< bits/s/Hz, pre-log included
    bool simplified = false;      ///< true for the closed-form special case

    // Per-user interference coefficients of the approximate SINR
    // 1 / (t1 d^alpha + t2 d^{-alpha} + t3). One entry for RUS (users are
    // exchangeable), K entries for LUS.
    std::vector<double> term_t1, term_t2, term_t3;
};

/// Random-selection approximation: single integral of the rate against the
/// parent distance law, interference moment shared by all users.
RateApproximation approx_rate_rus(const SystemConfig& cfg, int k_active);

/// Location-based selection: per-user integrals against the order-statistic
/// densities of the K nearest out of N candidates.
RateApproximation approx_rate_lus(const SystemConfig& cfg, int k_active,
                                  MomentPath path = MomentPath::hypergeometric);

/// Closed-form double-Jensen approximations, only valid with perfect
/// estimation and no transmit correlation (rho = 0, delta = 0).
RateApproximation approx_rate_special(const SystemConfig& cfg, int k_active, Scheme scheme);

} // namespace mimosel
