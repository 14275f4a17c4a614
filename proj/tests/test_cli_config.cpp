#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mimosel/errors.hpp"
#include "mimosel/run_config.hpp"
#include "mimosel/table.hpp"

using namespace mimosel;

namespace {

RunConfigFile parse(const std::string& text) {
    std::istringstream in(text);
    return parse_run_config(in);
}

} // namespace

TEST_CASE("run config parsing") {
    SUBCASE("full document") {
        const RunConfigFile cfg = parse(R"(
# paper setup at a different power
[system]
num_antennas = 32
num_candidates = 64
coherence_symbols = 196
tx_power_dbm = 20.0
noise_power_dbm = -96
pathloss_ref = 2.951209226666387e-4
pathloss_exp = 3.76
est_error = 0.1
corr_coef = 0.5
r_min = 35
r_max = 250
seed = 42
trials = 500

[simulate]
schemes = kstar-rus, kstar-lus
active_k = 12

[sweep]
axis = power_dbm
values = 10, 20, 30, 40

[fairness]
windows = 50
slots_per_window = 100

[sus]
alpha = 0.35
tune_trials = 200

[validate]
antennas = 32, 64
ssf_draws = 500
)");
        CHECK(cfg.system.tx_power_dbm == 20.0);
        CHECK(cfg.system.est_error == 0.1);
        CHECK(cfg.system.seed == 42);
        CHECK(cfg.schemes == std::vector<Scheme>({Scheme::kstar_rus, Scheme::kstar_lus}));
        CHECK(cfg.active_count == 12);
        CHECK(cfg.sweep_axis == SweepAxis::power_dbm);
        CHECK(cfg.sweep_values == std::vector<double>({10, 20, 30, 40}));
        CHECK(cfg.windows == 50);
        CHECK(cfg.sus_alpha == 0.35);
        CHECK(cfg.validate_antennas == std::vector<int>({32, 64}));
    }

    SUBCASE("unknown key is a hard error") {
        CHECK_THROWS_AS(parse("[system]\nnum_antennae = 32\n"), ConfigError);
        CHECK_THROWS_AS(parse("[simulate]\nscheme = rus\n"), ConfigError);
    }

    SUBCASE("unknown section is a hard error") {
        CHECK_THROWS_AS(parse("[systems]\nnum_antennas = 32\n"), ConfigError);
    }

    SUBCASE("keys before any section are rejected") {
        CHECK_THROWS_AS(parse("num_antennas = 32\n"), ConfigError);
    }

    SUBCASE("system invariants re-validated on load") {
        CHECK_THROWS_AS(parse("[system]\nnum_candidates = 8\n"), ConfigError);
        CHECK_THROWS_AS(parse("[system]\ncorr_coef = 1.0\n"), ConfigError);
    }

    SUBCASE("malformed numbers carry the key name") {
        try {
            parse("[system]\ntx_power_dbm = ten\n");
            CHECK(false);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("tx_power_dbm") != std::string::npos);
        }
    }

    SUBCASE("unknown scheme name") {
        CHECK_THROWS_AS(parse("[simulate]\nschemes = rus, wrr\n"), ConfigError);
    }
}

TEST_CASE("result table CSV round-trip preserves doubles exactly") {
    ResultTable table;
    table.set_meta("seed", "42");
    table.set_meta("fingerprint", "deadbeef");
    table.add_column("k");
    table.add_column("rate", "bit/s/Hz");
    table.add_column("scheme");

    const double values[] = {0.1, 1.0 / 3.0, 2.51188643150958e-10, 74.93473176129105,
                             -1.7976931348623157e308};
    for (double v : values) {
        table.begin_row();
        table.push(7);
        table.push(v);
        table.push("kstar-lus");
    }

    std::istringstream in(table.to_csv());
    const ResultTable parsed = ResultTable::from_csv(in);
    CHECK(parsed.metadata().at("seed") == "42");
    CHECK(parsed.column_count() == 3);
    CHECK(parsed.column_name(1) == "rate");
    REQUIRE(parsed.row_count() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(parse_double(parsed.cell(i, 1)) == values[i]);
        CHECK(parsed.cell(i, 2) == "kstar-lus");
    }
}
