#include "mimosel/rate_approx.hpp"

#include <cmath>

#include "mimosel/correlation.hpp"
#include "mimosel/distance_law.hpp"
#include "mimosel/errors.hpp"
#include "mimosel/placement.hpp"
#include "mimosel/quadrature.hpp"
#include "mimosel/rmt.hpp"

namespace mimosel {

namespace {

constexpr double kRateAbsTol = 1e-8;
constexpr int kInitialPanels = 32;

void check_active_count(const SystemConfig& cfg, int k_active) {
    if (k_active < 1 || k_active >= cfg.num_antennas)
        throw ConfigError("rate approximation requires 1 <= K < M");
    if (k_active >= cfg.coherence_symbols)
        throw ConfigError("rate approximation requires K < T");
}

double prelog(const SystemConfig& cfg, int k_active) {
    return 1.0 - static_cast<double>(k_active) / cfg.coherence_symbols;
}

/// log2(1 + (1-rho)/(a1 (r^alpha + s) + b1 (s r^{-alpha} + 1))), the rate
/// integrand with the (1-rho) factors of A and B moved to the numerator.
struct RateIntegrand {
    double a1, b1, s, alpha, one_minus_rho;

    double operator()(double r) const {
        const double r_alpha = std::pow(r, alpha);
        const double denom = a1 * (r_alpha + s) + b1 * (s / r_alpha + 1.0);
        return std::log2(1.0 + one_minus_rho / denom);
    }
};

} // namespace

RateApproximation approx_rate_rus(const SystemConfig& cfg, int k_active) {
    cfg.validate();
    check_active_count(cfg, k_active);

    const DeterministicEquivalents de = deterministic_equivalents(cfg, k_active);
    const double one_minus_rho = 1.0 - cfg.est_error;
    const double a1 = de.coeff_a * one_minus_rho;
    const double b1 = de.coeff_b * one_minus_rho;

    const DistanceLaw parent = DistanceLaw::unordered(cfg.r_min, cfg.r_max, cfg.num_candidates);
    const double s = (k_active - 1) * moment_unordered(parent, cfg.pathloss_exp);

    const RateIntegrand integrand{a1, b1, s, cfg.pathloss_exp, one_minus_rho};
    const double mean_rate =
        integrate([&](double r) { return radius_pdf(r, cfg.r_min, cfg.r_max) * integrand(r); },
                  cfg.r_min, cfg.r_max, kRateAbsTol, 0.0, kInitialPanels);

    RateApproximation approx;
    approx.scheme = Scheme::rus;
    approx.active_count = k_active;
    approx.value = prelog(cfg, k_active) * k_active * mean_rate;
    approx.term_t1 = {de.coeff_a};
    approx.term_t2 = {de.coeff_b * s};
    approx.term_t3 = {de.coeff_a * s + de.coeff_b};
    return approx;
}

RateApproximation approx_rate_lus(const SystemConfig& cfg, int k_active, MomentPath path) {
    cfg.validate();
    check_active_count(cfg, k_active);
    if (k_active > cfg.num_candidates)
        throw ConfigError("LUS approximation requires K <= N");

    const DeterministicEquivalents de = deterministic_equivalents(cfg, k_active);
    const double one_minus_rho = 1.0 - cfg.est_error;
    const double a1 = de.coeff_a * one_minus_rho;
    const double b1 = de.coeff_b * one_minus_rho;

    std::vector<double> moments(k_active);
    std::vector<DistanceLaw> laws;
    laws.reserve(k_active);
    double moment_sum = 0.0;
    for (int k = 1; k <= k_active; ++k) {
        laws.push_back(DistanceLaw::order_statistic(cfg.r_min, cfg.r_max, cfg.num_candidates, k));
        moments[k - 1] = path == MomentPath::hypergeometric
                             ? moment_order_stat(laws.back(), cfg.pathloss_exp)
                             : moment_order_stat_quadrature(laws.back(), cfg.pathloss_exp);
        moment_sum += moments[k - 1];
    }

    RateApproximation approx;
    approx.scheme = Scheme::lus;
    approx.active_count = k_active;
    approx.term_t1.assign(k_active, de.coeff_a);
    approx.term_t2.resize(k_active);
    approx.term_t3.resize(k_active);

    double total = 0.0;
    for (int k = 1; k <= k_active; ++k) {
        const double s_k = moment_sum - moments[k - 1];
        const RateIntegrand integrand{a1, b1, s_k, cfg.pathloss_exp, one_minus_rho};
        const DistanceLaw& law = laws[k - 1];
        total += integrate([&](double r) { return law.pdf(r) * integrand(r); }, cfg.r_min,
                           cfg.r_max, kRateAbsTol, 0.0, kInitialPanels);
        approx.term_t2[k - 1] = de.coeff_b * s_k;
        approx.term_t3[k - 1] = de.coeff_a * s_k + de.coeff_b;
    }
    approx.value = prelog(cfg, k_active) * total;
    return approx;
}

RateApproximation approx_rate_special(const SystemConfig& cfg, int k_active, Scheme scheme) {
    cfg.validate();
    check_active_count(cfg, k_active);
    if (cfg.est_error != 0.0 || cfg.corr_coef != 0.0)
        throw ConfigError("special-case approximation requires rho = 0 and delta = 0");

    const double p = cfg.tx_power_mw();
    const double noise = cfg.noise_power_mw();
    const double c = cfg.pathloss_ref;
    const double m_minus_k = static_cast<double>(cfg.num_antennas - k_active);

    double sinr;
    if (is_rus_family(scheme)) {
        const double a2 = cfg.pathloss_exp + 2.0;
        sinr = p * c * m_minus_k * a2 * (cfg.r_max * cfg.r_max - cfg.r_min * cfg.r_min) /
               (2.0 * noise * k_active *
                (std::pow(cfg.r_max, a2) - std::pow(cfg.r_min, a2)));
    } else if (is_lus_family(scheme)) {
        if (k_active > cfg.num_candidates)
            throw ConfigError("LUS approximation requires K <= N");
        double moment_sum = 0.0;
        for (int k = 1; k <= k_active; ++k)
            moment_sum += moment_order_stat(
                DistanceLaw::order_statistic(cfg.r_min, cfg.r_max, cfg.num_candidates, k),
                cfg.pathloss_exp);
        sinr = p * c * m_minus_k / (noise * moment_sum);
    } else {
        throw ConfigError("special-case approximation covers RUS and LUS only");
    }

    RateApproximation approx;
    approx.scheme = is_rus_family(scheme) ? Scheme::rus : Scheme::lus;
    approx.active_count = k_active;
    approx.simplified = true;
    approx.value = prelog(cfg, k_active) * k_active * std::log2(1.0 + sinr);
    return approx;
}

} // namespace mimosel
