#include "mimosel/channel.hpp"

#include <cmath>

#include "mimosel/errors.hpp"

namespace mimosel {

double pathloss(double c, double d, double alpha) { return c * std::pow(d, -alpha); }

ChannelRealization draw_channel(const SystemConfig& cfg, const CorrelationModel& corr,
                                const Eigen::VectorXd& active_distances, RngStream& rng) {
    const Eigen::Index k = active_distances.size();
    const Eigen::Index m = corr.dim;
    if (k < 1) throw ConfigError("draw_channel requires at least one active user");
    for (Eigen::Index i = 0; i < k; ++i) {
        const double d = active_distances[i];
        if (!(d >= cfg.r_min && d <= cfg.r_max))
            throw ConfigError("active distance outside [r_min, r_max]");
    }

    const double rho = cfg.est_error;
    ChannelRealization ch;
    ch.distances = active_distances;
    ch.lsf.resize(k);
    for (Eigen::Index i = 0; i < k; ++i)
        ch.lsf[i] = pathloss(cfg.pathloss_ref, active_distances[i], cfg.pathloss_exp);

    ch.ssf_est = std::sqrt(1.0 - rho) * rng.gaussian_matrix(k, m);
    ch.ssf_err = std::sqrt(rho) * rng.gaussian_matrix(k, m);
    ch.ssf = ch.ssf_est + ch.ssf_err;

    const Eigen::VectorXd amp = ch.lsf.cwiseSqrt();
    if (corr.is_identity()) {
        ch.composite = amp.asDiagonal() * ch.ssf;
        ch.composite_est = amp.asDiagonal() * ch.ssf_est;
    } else {
        ch.composite = amp.asDiagonal() * (ch.ssf * corr.sqrt_matrix);
        ch.composite_est = amp.asDiagonal() * (ch.ssf_est * corr.sqrt_matrix);
    }
    return ch;
}

ChannelRealization select_rows(const ChannelRealization& full, const std::vector<int>& indices) {
    const Eigen::Index k = static_cast<Eigen::Index>(indices.size());
    ChannelRealization sub;
    sub.distances.resize(k);
    sub.lsf.resize(k);
    sub.ssf.resize(k, full.antenna_count());
    sub.ssf_est.resize(k, full.antenna_count());
    sub.ssf_err.resize(k, full.antenna_count());
    sub.composite.resize(k, full.antenna_count());
    sub.composite_est.resize(k, full.antenna_count());
    for (Eigen::Index i = 0; i < k; ++i) {
        const int r = indices[static_cast<std::size_t>(i)];
        sub.distances[i] = full.distances[r];
        sub.lsf[i] = full.lsf[r];
        sub.ssf.row(i) = full.ssf.row(r);
        sub.ssf_est.row(i) = full.ssf_est.row(r);
        sub.ssf_err.row(i) = full.ssf_err.row(r);
        sub.composite.row(i) = full.composite.row(r);
        sub.composite_est.row(i) = full.composite_est.row(r);
    }
    return sub;
}

} // namespace mimosel
