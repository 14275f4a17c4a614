#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mimosel/channel.hpp"
#include "mimosel/errors.hpp"
#include "mimosel/rng.hpp"
#include "mimosel/selection.hpp"
#include "mimosel/sim.hpp"
#include "mimosel/zf.hpp"

using namespace mimosel;

TEST_CASE("Jain index identities") {
    Eigen::VectorXd equal = Eigen::VectorXd::Constant(64, 0.7);
    CHECK(jain_index(equal) == doctest::Approx(1.0).epsilon(1e-14));

    Eigen::VectorXd single = Eigen::VectorXd::Zero(64);
    single[5] = 3.0;
    CHECK(jain_index(single) == doctest::Approx(1.0 / 64.0).epsilon(1e-14));

    CHECK(jain_index(Eigen::VectorXd::Zero(8)) == 0.0);
}

TEST_CASE("single trial equals a hand-stepped computation") {
    SystemConfig cfg;
    cfg.seed = 77;
    const SimulationReport report = ergodic_rate(cfg, Scheme::rus, 8, 1);

    const CorrelationModel corr = build_correlation(cfg.num_antennas, cfg.corr_coef);
    RngStream rng = RngStream::for_trial(cfg.seed, 0);
    const UserPlacement placement = sample_placement(cfg, rng);
    const SelectionDecision decision =
        select_rus(8, cfg.num_candidates, cfg.coherence_symbols, rng);
    Eigen::VectorXd distances(8);
    for (int i = 0; i < 8; ++i) distances[i] = placement.radii[decision.active_indices[i]];
    const ChannelRealization ch = draw_channel(cfg, corr, distances, rng);
    const PrecoderOutput pre = zf_precode(ch, cfg.tx_power_mw());
    const LinkResult link =
        evaluate_link(ch, pre, corr, cfg.noise_power_mw(), decision.pilot_prelog);

    CHECK(report.mean_sum_rate == link.sum_rate);
    CHECK(report.trials == 1);
    CHECK(report.discarded == 0);
}

TEST_CASE("reports are bit-identical across worker counts") {
    SystemConfig cfg;
    cfg.seed = 2025;
    for (Scheme scheme : {Scheme::rus, Scheme::kstar_lus}) {
        SimOptions serial;
        serial.threads = 1;
        SimOptions wide;
        wide.threads = 8;
        const SimulationReport a = ergodic_rate(cfg, scheme, 8, 400, serial);
        const SimulationReport b = ergodic_rate(cfg, scheme, 8, 400, wide);
        CHECK(a.mean_sum_rate == b.mean_sum_rate);
        CHECK(a.std_error == b.std_error);
        CHECK(a.discarded == b.discarded);
    }
}

TEST_CASE("kstar scheme resolves its user count offline") {
    SystemConfig cfg;
    const SimulationReport report = ergodic_rate(cfg, Scheme::kstar_rus, std::nullopt, 50);
    CHECK(report.k_star >= 1);
    CHECK(report.k_star < cfg.num_antennas);
    CHECK(report.active_count == report.k_star);
    CHECK(report.k_star == solve_kstar(cfg, Scheme::rus).k_star);
}

TEST_CASE("discard accounting and warning flag") {
    SystemConfig cfg;
    SimOptions opt;
    opt.cond_limit = 1.0;  // everything is discarded
    const SimulationReport report = ergodic_rate(cfg, Scheme::rus, 8, 20, opt);
    CHECK(report.discarded == 20);
    CHECK(report.discard_warning);
    CHECK(std::isnan(report.mean_sum_rate));
}

TEST_CASE("scheme ordering at the paper configuration") {
    SystemConfig cfg;
    cfg.seed = 31;
    const int trials = 1500;
    SimOptions opt;
    opt.sus_grid = {0.2, 0.3, 0.4, 0.5, 0.6};
    opt.sus_tune_trials = 150;

    const SimulationReport lus = ergodic_rate(cfg, Scheme::kstar_lus, std::nullopt, trials, opt);
    const SimulationReport rus_star =
        ergodic_rate(cfg, Scheme::kstar_rus, std::nullopt, trials, opt);
    const SimulationReport rus_full = ergodic_rate(cfg, Scheme::rus, std::nullopt, trials, opt);
    const SimulationReport sus = ergodic_rate(cfg, Scheme::sus, std::nullopt, trials, opt);

    CHECK(lus.mean_sum_rate > rus_star.mean_sum_rate);
    // conventional RUS serves all M antennas and pays for it
    CHECK(rus_full.active_count == cfg.num_antennas);
    CHECK(rus_star.mean_sum_rate - rus_star.ci95_half_width >
          rus_full.mean_sum_rate + rus_full.ci95_half_width);
    // SUS pays the full-N pilot overhead; at most comparable to K*-RUS
    CHECK(sus.mean_sum_rate <
          rus_star.mean_sum_rate + rus_star.ci95_half_width + sus.ci95_half_width);
    CHECK(sus.alpha_sus >= 0.2);
    CHECK(sus.alpha_sus <= 0.6);
    CHECK(sus.mean_active >= 1.0);
}

TEST_CASE("fairness identities at rho = 0") {
    SystemConfig cfg;
    cfg.seed = 4;

    SUBCASE("random selection is fair in aggregate") {
        const FairnessReport report = fairness(cfg, Scheme::kstar_rus, 25, 60);
        CHECK(report.jfi > 0.95);
        CHECK(report.jfi <= 1.0 + 1e-12);
        // every rank is served about K/N of the time
        const double expected = static_cast<double>(report.active_count) / cfg.num_candidates;
        for (int r = 0; r < cfg.num_candidates; ++r)
            CHECK(report.selection_freq[r] == doctest::Approx(expected).epsilon(0.35));
        CHECK(report.jfi_window_mean < report.jfi);  // finite-window noise only lowers it
    }

    SUBCASE("location-based selection serves exactly the nearest K*") {
        const FairnessReport report = fairness(cfg, Scheme::kstar_lus, 10, 40);
        const int k = report.active_count;
        for (int r = 0; r < cfg.num_candidates; ++r) {
            if (r < k)
                CHECK(report.selection_freq[r] == 1.0);
            else
                CHECK(report.selection_freq[r] == 0.0);
        }
        const double expected = static_cast<double>(k) / cfg.num_candidates;
        CHECK(report.jfi == doctest::Approx(expected).epsilon(1e-9));
        CHECK(report.jfi_window_mean == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("sweep") {
    SystemConfig cfg;
    cfg.seed = 6;

    SUBCASE("single-point sweep equals ergodic_rate") {
        const auto rows =
            sweep(cfg, SweepAxis::power_dbm, {30.0}, {Scheme::kstar_rus}, 200);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].error.empty());
        const SimulationReport direct = ergodic_rate(cfg, Scheme::kstar_rus, std::nullopt, 200);
        CHECK(rows[0].report.mean_sum_rate == direct.mean_sum_rate);
        CHECK(rows[0].approx_rate > 0.0);
    }

    SUBCASE("failing points are recorded, sweep continues") {
        const auto rows =
            sweep(cfg, SweepAxis::active_count, {8.0, 500.0, 4.0}, {Scheme::lus}, 20);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].error.empty());
        CHECK(!rows[1].error.empty());
        CHECK(rows[2].error.empty());
    }

    SUBCASE("rho axis degrades both schemes") {
        const auto rows = sweep(cfg, SweepAxis::est_error, {0.0, 0.3},
                                {Scheme::kstar_rus, Scheme::kstar_lus}, 400);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0].report.mean_sum_rate > rows[2].report.mean_sum_rate);  // rus
        CHECK(rows[1].report.mean_sum_rate > rows[3].report.mean_sum_rate);  // lus
    }
}

TEST_CASE("alpha_sus tuning") {
    SystemConfig cfg;
    cfg.seed = 8;

    SUBCASE("single-value grid returns that value") {
        const SusParams params = tune_alpha_sus(cfg, {0.4}, 30);
        CHECK(params.alpha_sus == 0.4);
    }

    SUBCASE("winner is within one standard error of every neighbor") {
        SusTuneDiagnostics diag;
        const std::vector<double> grid = {0.2, 0.3, 0.4, 0.5};
        const SusParams params = tune_alpha_sus(cfg, grid, 120, 0, &diag);
        REQUIRE(diag.mean_rate.size() == grid.size());
        double best = -1.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (grid[i] == params.alpha_sus) best = diag.mean_rate[i];
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(best >= diag.mean_rate[i] - diag.std_error[i]);
    }

    SUBCASE("rejects invalid grids") {
        CHECK_THROWS_AS((void)tune_alpha_sus(cfg, {}, 10), ConfigError);
        CHECK_THROWS_AS((void)tune_alpha_sus(cfg, {0.0}, 10), ConfigError);
        CHECK_THROWS_AS((void)tune_alpha_sus(cfg, {1.2}, 10), ConfigError);
    }
}
