#include "mimosel/system_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "mimosel/errors.hpp"

namespace mimosel {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

} // namespace

void SystemConfig::validate() const {
    require(num_antennas >= 1, "num_antennas must be positive");
    require(num_candidates >= num_antennas, "num_candidates must satisfy N >= M");
    require(coherence_symbols >= 2, "coherence_symbols must leave room for data");
    require(std::isfinite(tx_power_dbm), "tx_power_dbm must be finite");
    require(std::isfinite(noise_power_dbm), "noise_power_dbm must be finite");
    require(pathloss_ref > 0.0 && std::isfinite(pathloss_ref), "pathloss_ref must be positive");
    require(pathloss_exp > 0.0 && std::isfinite(pathloss_exp), "pathloss_exp must be positive");
    require(est_error >= 0.0 && est_error <= 1.0, "est_error must lie in [0,1]");
    require(corr_coef >= 0.0 && corr_coef < 1.0, "corr_coef must lie in [0,1)");
    require(r_min > 0.0, "r_min must be positive");
    require(r_max > r_min, "r_max must exceed r_min");
    require(trials >= 1, "trials must be positive");
}

int SystemConfig::max_active() const {
    return std::min(num_antennas, coherence_symbols - 1);
}

std::uint64_t config_fingerprint(const SystemConfig& cfg) {
    char buffer[512];
    const int len = std::snprintf(
        buffer, sizeof(buffer),
        "M=%d;N=%d;T=%d;P=%.17g;noise=%.17g;c=%.17g;alpha=%.17g;rho=%.17g;delta=%.17g;"
        "rmin=%.17g;rmax=%.17g;seed=%llu;trials=%d",
        cfg.num_antennas, cfg.num_candidates, cfg.coherence_symbols, cfg.tx_power_dbm,
        cfg.noise_power_dbm, cfg.pathloss_ref, cfg.pathloss_exp, cfg.est_error, cfg.corr_coef,
        cfg.r_min, cfg.r_max, static_cast<unsigned long long>(cfg.seed), cfg.trials);

    std::uint64_t hash = 0xCBF29CE484222325ull;
    for (int i = 0; i < len; ++i) {
        hash ^= static_cast<unsigned char>(buffer[i]);
        hash *= 0x100000001B3ull;
    }
    return hash;
}

} // namespace mimosel
