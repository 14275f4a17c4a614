#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mimosel/channel.hpp"
#include "mimosel/correlation.hpp"
#include "mimosel/errors.hpp"
#include "mimosel/rng.hpp"
#include "mimosel/zf.hpp"

using namespace mimosel;

namespace {

ChannelRealization make_realization(const SystemConfig& cfg, const CorrelationModel& corr,
                                    int k_active, std::uint64_t trial) {
    RngStream rng = RngStream::for_trial(cfg.seed, trial);
    Eigen::VectorXd distances(k_active);
    for (int i = 0; i < k_active; ++i)
        distances[i] = cfg.r_min + (cfg.r_max - cfg.r_min) * (i + 1.0) / (k_active + 1.0);
    return draw_channel(cfg, corr, distances, rng);
}

} // namespace

TEST_CASE("single-user power factor") {
    SystemConfig cfg;
    const CorrelationModel corr = build_correlation(cfg.num_antennas, 0.0);
    const ChannelRealization ch = make_realization(cfg, corr, 1, 0);
    const PrecoderOutput pre = zf_precode(ch, cfg.tx_power_mw());
    CHECK(pre.gamma_sq ==
          doctest::Approx(cfg.tx_power_mw() * ch.composite_est.row(0).squaredNorm())
              .epsilon(1e-12));
}

TEST_CASE("orthonormal rows give gamma_sq = P/K") {
    SystemConfig cfg;
    const int k = 4, m = 8;
    ChannelRealization ch;
    ch.distances = Eigen::VectorXd::Constant(k, 100.0);
    ch.lsf = Eigen::VectorXd::Ones(k);
    ch.composite_est = Eigen::MatrixXcd::Zero(k, m);
    for (int i = 0; i < k; ++i) ch.composite_est(i, i) = 1.0;
    ch.composite = ch.composite_est;
    ch.ssf = ch.ssf_est = ch.composite_est;
    ch.ssf_err = Eigen::MatrixXcd::Zero(k, m);
    const PrecoderOutput pre = zf_precode(ch, 1000.0);
    CHECK(pre.gamma_sq == doctest::Approx(1000.0 / k).epsilon(1e-12));
}

TEST_CASE("power identity against an independent trace") {
    SystemConfig cfg;
    cfg.est_error = 0.1;
    const CorrelationModel corr = build_correlation(cfg.num_antennas, 0.3);
    for (std::uint64_t t = 0; t < 20; ++t) {
        const ChannelRealization ch = make_realization(cfg, corr, 8, t);
        const PrecoderOutput pre = zf_precode(ch, cfg.tx_power_mw());
        const Eigen::MatrixXcd gram = ch.composite_est * ch.composite_est.adjoint();
        const double trace_inv = gram.inverse().trace().real();
        CHECK(pre.gamma_sq * trace_inv ==
              doctest::Approx(cfg.tx_power_mw()).epsilon(1e-10));
    }
}

TEST_CASE("zero-forcing identity on the estimated channel") {
    SystemConfig cfg;
    cfg.est_error = 0.05;
    const CorrelationModel corr = build_correlation(cfg.num_antennas, 0.5);
    for (std::uint64_t t = 0; t < 20; ++t) {
        const ChannelRealization ch = make_realization(cfg, corr, 12, t);
        const PrecoderOutput pre = zf_precode(ch, cfg.tx_power_mw());
        const Eigen::MatrixXcd residual =
            ch.composite_est * pre.precoder - Eigen::MatrixXcd::Identity(12, 12);
        CHECK(residual.cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("perfect estimation gives equal SINRs") {
    SystemConfig cfg;
    cfg.est_error = 0.0;
    const CorrelationModel corr = build_correlation(cfg.num_antennas, 0.0);
    const ChannelRealization ch = make_realization(cfg, corr, 8, 3);
    const PrecoderOutput pre = zf_precode(ch, cfg.tx_power_mw());
    const double prelog = 1.0 - 8.0 / cfg.coherence_symbols;
    const LinkResult link = evaluate_link(ch, pre, corr, cfg.noise_power_mw(), prelog);

    const double reference = pre.gamma_sq / cfg.noise_power_mw();
    for (int i = 0; i < 8; ++i)
        CHECK(link.sinr[i] == doctest::Approx(reference).epsilon(1e-10));
    CHECK(link.sum_rate ==
          doctest::Approx(prelog * 8.0 * std::log2(1.0 + reference)).epsilon(1e-12));
}

TEST_CASE("sum rate decreases with noise power") {
    SystemConfig cfg;
    cfg.est_error = 0.1;
    const CorrelationModel corr = build_correlation(cfg.num_antennas, 0.2);
    const ChannelRealization ch = make_realization(cfg, corr, 8, 4);
    const PrecoderOutput pre = zf_precode(ch, cfg.tx_power_mw());
    const double prelog = 1.0 - 8.0 / cfg.coherence_symbols;
    double previous = 1e300;
    for (double noise_dbm = -110.0; noise_dbm <= -60.0; noise_dbm += 10.0) {
        const LinkResult link =
            evaluate_link(ch, pre, corr, dbm_to_linear(noise_dbm), prelog);
        CHECK(link.sum_rate < previous);
        previous = link.sum_rate;
    }
}

TEST_CASE("ill-conditioned Gram is rejected with the condition attached") {
    SystemConfig cfg;
    ChannelRealization ch;
    const int k = 2, m = 4;
    ch.distances = Eigen::VectorXd::Constant(k, 100.0);
    ch.lsf = Eigen::VectorXd::Ones(k);
    ch.composite_est = Eigen::MatrixXcd::Zero(k, m);
    ch.composite_est(0, 0) = 1.0;
    ch.composite_est(1, 0) = 1.0;
    ch.composite_est(1, 1) = 1e-9;  // nearly dependent rows
    ch.composite = ch.composite_est;
    ch.ssf = ch.ssf_est = ch.composite_est;
    ch.ssf_err = Eigen::MatrixXcd::Zero(k, m);
    CHECK_THROWS_AS((void)zf_precode(ch, 1000.0), IllConditionedError);
    try {
        (void)zf_precode(ch, 1000.0);
    } catch (const IllConditionedError& e) {
        CHECK(e.condition() > 1e12);
    }
}

TEST_CASE("K > M is rejected") {
    SystemConfig cfg;
    cfg.num_antennas = 4;
    const CorrelationModel corr = build_correlation(4, 0.0);
    RngStream rng = RngStream::for_trial(1, 0);
    Eigen::VectorXd distances = Eigen::VectorXd::Constant(5, 100.0);
    const ChannelRealization ch = draw_channel(cfg, corr, distances, rng);
    CHECK_THROWS_AS((void)zf_precode(ch, 1000.0), ConfigError);
}
