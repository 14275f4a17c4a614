#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mimosel/channel.hpp"
#include "mimosel/errors.hpp"
#include "mimosel/placement.hpp"
#include "mimosel/rmt.hpp"
#include "mimosel/rng.hpp"
#include "mimosel/zf.hpp"
#include "oracle_helpers.hpp"

using namespace mimosel;

TEST_CASE("identity correlation closed forms") {
    const CorrelationModel corr = build_correlation(32, 0.0);
    CHECK(solve_phi(corr, 16) == 0.5);
    CHECK(solve_phi(corr, 1) == doctest::Approx(31.0 / 32.0).epsilon(1e-15));
    CHECK(compute_psi(corr, 16, 0.5) == 0.25);
    CHECK(compute_psi(corr, 8, 0.75) == doctest::Approx(0.5625).epsilon(1e-15));
}

TEST_CASE("fixed point agrees with dense bisection across delta and K") {
    for (double delta : {0.3, 0.5, 0.9}) {
        const CorrelationModel corr = build_correlation(32, delta);
        for (int k = 1; k < 32; k += 5) {
            const double phi = solve_phi(corr, k);
            const double reference = oracle::bisect_phi_dense(corr.matrix, k);
            CHECK(phi == doctest::Approx(reference).epsilon(1e-10));
        }
    }
}

TEST_CASE("frozen reference value for delta=0.5, K=8, M=32") {
    // Bisection on the dense residual, 50k rounds.
    const CorrelationModel corr = build_correlation(32, 0.5);
    const double phi = solve_phi(corr, 8);
    CHECK(phi == doctest::Approx(0.6415074882535841).epsilon(1e-10));
    const double psi = compute_psi(corr, 8, phi);
    CHECK(psi == doctest::Approx(oracle::psi_dense(corr.matrix, 8, phi)).epsilon(1e-12));
    CHECK(psi == doctest::Approx(0.5360456005597815).epsilon(1e-10));
}

TEST_CASE("phi decreases in K") {
    const CorrelationModel corr = build_correlation(32, 0.5);
    double previous = 1.0;
    for (int k = 1; k < 32; ++k) {
        const double phi = solve_phi(corr, k);
        CHECK(phi < previous);
        previous = phi;
    }
}

TEST_CASE("coefficients and their special cases") {
    SystemConfig cfg;

    SUBCASE("perfect estimation, no correlation") {
        cfg.est_error = 0.0;
        cfg.corr_coef = 0.0;
        for (int k = 1; k < 32; ++k) {
            const DeterministicEquivalents de = deterministic_equivalents(cfg, k);
            const double expected =
                cfg.noise_power_mw() / (cfg.tx_power_mw() * cfg.pathloss_ref * (32.0 - k));
            CHECK(de.coeff_a == doctest::Approx(expected).epsilon(1e-10));
            CHECK(de.coeff_b == 0.0);
        }
    }

    SUBCASE("B vanishes iff rho is zero, grows with rho") {
        cfg.corr_coef = 0.5;
        cfg.est_error = 0.0;
        CHECK(deterministic_equivalents(cfg, 8).coeff_b == 0.0);
        double previous = 0.0;
        for (double rho : {0.05, 0.1, 0.3, 0.6, 0.9}) {
            cfg.est_error = rho;
            const DeterministicEquivalents de = deterministic_equivalents(cfg, 8);
            CHECK(de.coeff_a > 0.0);
            CHECK(de.coeff_b > previous);
            previous = de.coeff_b;
        }
    }

    SUBCASE("rho=0.1, delta=0 closed form B = (0.1/0.9)/(M-K)") {
        cfg.est_error = 0.1;
        cfg.corr_coef = 0.0;
        const DeterministicEquivalents de = deterministic_equivalents(cfg, 8);
        CHECK(de.coeff_b == doctest::Approx((0.1 / 0.9) / 24.0).epsilon(1e-12));
    }

    SUBCASE("rho = 1 rejected") {
        cfg.est_error = 1.0;
        CHECK_THROWS_AS((void)deterministic_equivalents(cfg, 8), ConfigError);
    }

    SUBCASE("K out of range rejected") {
        CHECK_THROWS_AS((void)deterministic_equivalents(cfg, 32), ConfigError);
        CHECK_THROWS_AS((void)deterministic_equivalents(cfg, 0), ConfigError);
    }
}

TEST_CASE("asymptotic SINR structure") {
    SystemConfig cfg;
    cfg.est_error = 0.0;
    cfg.corr_coef = 0.0;
    const int k_active = 8;
    const DeterministicEquivalents de = deterministic_equivalents(cfg, k_active);

    SUBCASE("equal distances reduce to the closed form") {
        const double d = 120.0;
        const Eigen::VectorXd distances = Eigen::VectorXd::Constant(k_active, d);
        const double expected = cfg.tx_power_mw() * cfg.pathloss_ref * (32.0 - k_active) *
                                std::pow(d, -cfg.pathloss_exp) /
                                (k_active * cfg.noise_power_mw());
        CHECK(asymptotic_sinr(de, distances, 0) == doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("B = 0 makes the SINR user-independent") {
        Eigen::VectorXd distances(k_active);
        distances << 40, 55, 70, 90, 120, 150, 190, 240;
        const double first = asymptotic_sinr(de, distances, 0);
        for (int k = 1; k < k_active; ++k)
            CHECK(asymptotic_sinr(de, distances, k) == doctest::Approx(first).epsilon(1e-14));
    }

    SUBCASE("decreasing in every distance") {
        Eigen::VectorXd distances(k_active);
        distances << 40, 55, 70, 90, 120, 150, 190, 240;
        const double base = asymptotic_sinr(de, distances, 0);
        for (int i = 0; i < k_active; ++i) {
            Eigen::VectorXd bumped = distances;
            bumped[i] += 5.0;
            CHECK(asymptotic_sinr(de, bumped, 0) < base);
        }
    }
}

TEST_CASE("link-level SINR concentrates on the asymptotic value") {
    SystemConfig cfg;
    cfg.num_antennas = 128;
    cfg.num_candidates = 128;
    cfg.est_error = 0.1;
    cfg.corr_coef = 0.0;
    const int k_active = 32;
    const CorrelationModel corr = build_correlation(cfg.num_antennas, cfg.corr_coef);
    const DeterministicEquivalents de = deterministic_equivalents(cfg, corr, k_active);

    RngStream placement_rng = RngStream::for_trial(5, 0);
    Eigen::VectorXd distances(k_active);
    for (int i = 0; i < k_active; ++i)
        distances[i] = radius_from_uniform(placement_rng.uniform(), cfg.r_min, cfg.r_max);

    const int draws = 2000;
    std::vector<std::vector<double>> sinr(k_active);
    for (auto& v : sinr) v.reserve(draws);
    for (int t = 0; t < draws; ++t) {
        RngStream rng = RngStream::for_trial(cfg.seed, t);
        const ChannelRealization ch = draw_channel(cfg, corr, distances, rng);
        const PrecoderOutput pre = zf_precode(ch, cfg.tx_power_mw());
        const LinkResult link = evaluate_link(ch, pre, corr, cfg.noise_power_mw(), 1.0);
        for (int k = 0; k < k_active; ++k) sinr[k].push_back(link.sinr[k]);
    }
    for (int k = 0; k < k_active; ++k) {
        std::nth_element(sinr[k].begin(), sinr[k].begin() + draws / 2, sinr[k].end());
        const double median = sinr[k][draws / 2];
        CHECK(median ==
              doctest::Approx(asymptotic_sinr(de, distances, k)).epsilon(0.05));
    }
}

TEST_CASE("appendix validation limits") {
    SystemConfig cfg;
    cfg.num_antennas = 128;
    cfg.num_candidates = 128;

    SUBCASE("perfect estimation zeroes the quadratic form") {
        cfg.est_error = 0.0;
        cfg.corr_coef = 0.5;
        const AppendixReport report = validate_appendix(cfg, 32, 50);
        CHECK(report.quadform_limit == 0.0);
        CHECK(report.quadform_mean == 0.0);
        CHECK(report.rel_err_quadform == 0.0);
    }

    SUBCASE("gamma_sq limit at rho=0, delta=0") {
        cfg.est_error = 0.0;
        cfg.corr_coef = 0.0;
        const AppendixReport report = validate_appendix(cfg, 32, 400);
        CHECK(report.rel_err_gamma_sq < 0.03);
        CHECK(report.discarded == 0);
    }
}
