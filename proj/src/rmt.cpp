#include "mimosel/rmt.hpp"

#include <cmath>

#include "mimosel/channel.hpp"
#include "mimosel/errors.hpp"
#include "mimosel/placement.hpp"
#include "mimosel/rng.hpp"
#include "mimosel/zf.hpp"

namespace mimosel {

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kTolerance = 1e-13;

double fixed_point_map(const Eigen::VectorXd& lam, double ratio, double phi) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        acc += lam[i] / (1.0 + ratio * lam[i] / phi);
    return acc / static_cast<double>(lam.size());
}

double bisect_phi(const Eigen::VectorXd& lam, double ratio) {
    // g(phi) = phi - map(phi) is negative near 0 and positive at 1.
    double lo = 1e-30, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid - fixed_point_map(lam, ratio, mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

void check_k_range(const CorrelationModel& corr, int k_active) {
    if (k_active < 1 || k_active >= corr.dim)
        throw ConfigError("deterministic equivalents require 1 <= K < M");
}

} // namespace

double solve_phi(const CorrelationModel& corr, int k_active) {
    check_k_range(corr, k_active);
    const double m = static_cast<double>(corr.dim);
    if (corr.is_identity()) return 1.0 - static_cast<double>(k_active) / m;

    const double ratio = static_cast<double>(k_active) / m;
    double phi = 1.0;
    double prev_step = 0.0;
    for (int it = 0; it < kMaxIterations; ++it) {
        const double next = fixed_point_map(corr.eigenvalues, ratio, phi);
        const double step = next - phi;
        if (std::abs(step) < kTolerance) return next;
        if (it > 0 && step * prev_step < 0.0) return bisect_phi(corr.eigenvalues, ratio);
        prev_step = step;
        phi = next;
    }
    throw NoConvergenceError("phi fixed point did not converge");
}

double compute_psi(const CorrelationModel& corr, int k_active, double phi) {
    check_k_range(corr, k_active);
    if (corr.is_identity()) return phi * phi;
    const double ratio = static_cast<double>(k_active) / static_cast<double>(corr.dim);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < corr.eigenvalues.size(); ++i) {
        const double lam = corr.eigenvalues[i];
        const double denom = 1.0 + ratio * lam / phi;
        acc += lam * lam / (denom * denom);
    }
    return acc / static_cast<double>(corr.dim);
}

DeterministicEquivalents deterministic_equivalents(const SystemConfig& cfg,
                                                   const CorrelationModel& corr, int k_active) {
    if (cfg.est_error >= 1.0)
        throw ConfigError("deterministic equivalents undefined at est_error = 1");
    check_k_range(corr, k_active);

    DeterministicEquivalents de;
    de.phi = solve_phi(corr, k_active);
    de.psi = compute_psi(corr, k_active, de.phi);
    de.active_count = k_active;
    de.antenna_count = corr.dim;
    de.corr_coef = corr.delta;
    de.est_error = cfg.est_error;
    de.tx_power_mw = cfg.tx_power_mw();
    de.pathloss_ref = cfg.pathloss_ref;
    de.pathloss_exp = cfg.pathloss_exp;
    de.noise_mw = cfg.noise_power_mw();

    const double m = static_cast<double>(corr.dim);
    const double one_minus_rho = 1.0 - cfg.est_error;
    de.coeff_a = de.noise_mw / (one_minus_rho * de.tx_power_mw * cfg.pathloss_ref * de.phi * m);
    de.coeff_b = (cfg.est_error / one_minus_rho) * de.psi /
                 (m * de.phi * de.phi - static_cast<double>(k_active) * de.psi);
    return de;
}

DeterministicEquivalents deterministic_equivalents(const SystemConfig& cfg, int k_active) {
    return deterministic_equivalents(cfg, build_correlation(cfg.num_antennas, cfg.corr_coef),
                                     k_active);
}

double asymptotic_sinr(const DeterministicEquivalents& de, const Eigen::VectorXd& distances,
                       int user_index) {
    double sum_d_alpha = 0.0;
    for (Eigen::Index i = 0; i < distances.size(); ++i)
        sum_d_alpha += std::pow(distances[i], de.pathloss_exp);
    const double dk_neg = std::pow(distances[user_index], -de.pathloss_exp);
    return 1.0 / (sum_d_alpha * (de.coeff_a + de.coeff_b * dk_neg));
}

AppendixReport validate_appendix(const SystemConfig& cfg, int k_active, int n_trials) {
    cfg.validate();
    const CorrelationModel corr = build_correlation(cfg.num_antennas, cfg.corr_coef);
    const DeterministicEquivalents de = deterministic_equivalents(cfg, corr, k_active);

    // One fixed distance draw shared by every small-scale realization.
    RngStream placement_rng = RngStream::for_trial(derive_seed(cfg.seed, 0x617070656e646978ull), 0);
    Eigen::VectorXd distances(k_active);
    for (int i = 0; i < k_active; ++i)
        distances[i] = radius_from_uniform(placement_rng.uniform(), cfg.r_min, cfg.r_max);

    double sum_d_alpha = 0.0;
    for (int i = 0; i < k_active; ++i) sum_d_alpha += std::pow(distances[i], cfg.pathloss_exp);

    const double rho = cfg.est_error;
    const double m = static_cast<double>(cfg.num_antennas);
    const double kk = static_cast<double>(k_active);

    AppendixReport report;
    report.antenna_count = cfg.num_antennas;
    report.active_count = k_active;
    report.trials = n_trials;
    report.gamma_sq_limit =
        (1.0 - rho) * cfg.tx_power_mw() * cfg.pathloss_ref * de.phi * m / sum_d_alpha;
    report.quadform_limit =
        (rho / (1.0 - rho)) * de.psi / ((m / kk) * de.phi * de.phi - de.psi) * sum_d_alpha /
        (cfg.pathloss_ref * kk);

    double gamma_acc = 0.0;
    double quad_acc = 0.0;
    long long quad_count = 0;
    int used = 0;
    for (int t = 0; t < n_trials; ++t) {
        RngStream rng = RngStream::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
        const ChannelRealization ch = draw_channel(cfg, corr, distances, rng);
        PrecoderOutput pre;
        try {
            pre = zf_precode(ch, cfg.tx_power_mw());
        } catch (const IllConditionedError&) {
            ++report.discarded;
            continue;
        }
        gamma_acc += pre.gamma_sq;
        Eigen::MatrixXcd err_image;
        if (corr.is_identity())
            err_image = ch.ssf_err * pre.precoder;
        else
            err_image = (ch.ssf_err * corr.sqrt_matrix) * pre.precoder;
        for (int i = 0; i < k_active; ++i) {
            quad_acc += err_image.row(i).squaredNorm();
            ++quad_count;
        }
        ++used;
    }
    if (used == 0) throw NoConvergenceError("all appendix-validation trials were discarded");

    report.gamma_sq_mean = gamma_acc / used;
    report.quadform_mean = quad_acc / static_cast<double>(quad_count);
    report.rel_err_gamma_sq =
        std::abs(report.gamma_sq_mean - report.gamma_sq_limit) / report.gamma_sq_limit;
    report.rel_err_quadform =
        report.quadform_limit == 0.0
            ? std::abs(report.quadform_mean)
            : std::abs(report.quadform_mean - report.quadform_limit) / report.quadform_limit;
    return report;
}

} // namespace mimosel
