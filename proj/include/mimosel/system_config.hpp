#pragma once

#include <cstdint>

#include "mimosel/units.hpp"

namespace mimosel {

/// All scalar system parameters of the single-cell downlink model.
/// Defaults reproduce the reference urban-macro configuration:
/// T = 196 coherence symbols, annulus 35..250 m, pathloss exponent 3.76,
/// reference pathloss 10^-3.53 at 1 m, noise floor -96 dBm.
struct SystemConfig {
    int num_antennas = 32;     ///< M, BS antennas
    int num_candidates = 64;   ///< N, candidate users (N >= M)
    int coherence_symbols = 196; ///< T, symbols per coherence slot
    double tx_power_dbm = 30.0;
    double noise_power_dbm = -96.0;
    double pathloss_ref = 2.951209226666387e-4; ///< c, linear, at 1 m
    double pathloss_exp = 3.76;                 ///< alpha
    double est_error = 0.0;  ///< rho in [0,1], channel estimation error share
    double corr_coef = 0.0;  ///< delta in [0,1), transmit correlation
    double r_min = 35.0;     ///< meters
    double r_max = 250.0;    ///< meters
    std::uint64_t seed = 1;
    int trials = 10000;

    double tx_power_mw() const { return dbm_to_linear(tx_power_dbm); }
    double noise_power_mw() const { return dbm_to_linear(noise_power_dbm); }

    /// Throws ConfigError if any field violates its constraints.
    void validate() const;

    /// Largest admissible number of simultaneously served users. Serving
    /// K = M is allowed at the link level (conventional full-multiplexing
    /// random selection uses it); K < T keeps the pre-log positive.
    int max_active() const;
};

/// Stable FNV-1a hash of the canonicalized configuration; identifies which
/// parameter set produced a result table.
std::uint64_t config_fingerprint(const SystemConfig& cfg);

} // namespace mimosel
