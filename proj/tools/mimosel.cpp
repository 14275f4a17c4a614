// mimosel: downlink user-selection analysis for a single-cell massive MIMO
// system with zero-forcing precoding. Subcommands cover the offline K*
// search, deterministic rate approximations, Monte Carlo simulation,
// parameter sweeps, fairness evaluation and the large-system limit checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mimosel/errors.hpp"
#include "mimosel/rate_approx.hpp"
#include "mimosel/rmt.hpp"
#include "mimosel/run_config.hpp"
#include "mimosel/selection.hpp"
#include "mimosel/sim.hpp"
#include "mimosel/table.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;
constexpr int kExitAssertFailed = 4;

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    int threads = 0;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_trials = true) {
    cmd->add_option("--config", args.config_path, "run configuration file")->required();
    cmd->add_option("--seed", args.seed, "override the RNG seed");
    if (with_trials) cmd->add_option("--trials", args.trials, "override the trial count");
    cmd->add_option("--threads", args.threads,
                    "worker threads (default: MIMOSEL_THREADS or hardware)");
    cmd->add_option("--out", args.out_path, "CSV output path (JSON summary written next to it)");
}

mimosel::RunConfigFile load(const CommonArgs& args) {
    mimosel::RunConfigFile cfg = mimosel::load_run_config(args.config_path);
    if (args.seed) cfg.system.seed = *args.seed;
    if (args.trials) {
        if (*args.trials < 1) throw mimosel::ConfigError("--trials must be positive");
        cfg.system.trials = *args.trials;
    }
    return cfg;
}

std::string fingerprint_hex(const mimosel::SystemConfig& cfg) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(mimosel::config_fingerprint(cfg)));
    return buffer;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buffer;
}

mimosel::ResultTable make_table(const mimosel::SystemConfig& cfg, const std::string& command) {
    mimosel::ResultTable table;
    table.set_meta("tool", std::string("mimosel ") + kVersion);
    table.set_meta("command", command);
    table.set_meta("fingerprint", fingerprint_hex(cfg));
    table.set_meta("seed", std::to_string(cfg.seed));
    table.set_meta("timestamp", timestamp_utc());
    return table;
}

std::string json_path_for(const std::string& csv_path) {
    const auto dot = csv_path.find_last_of('.');
    const auto slash = csv_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return csv_path + ".json";
    return csv_path.substr(0, dot) + ".json";
}

void emit(const mimosel::ResultTable& table, const nlohmann::json& summary,
          const CommonArgs& args) {
    if (args.out_path.empty()) {
        std::cout << table.to_csv();
        return;
    }
    table.write_csv(args.out_path);
    std::ofstream json_out(json_path_for(args.out_path));
    if (!json_out) throw std::runtime_error("cannot write " + json_path_for(args.out_path));
    json_out << summary.dump(2) << "\n";
}

mimosel::SimOptions sim_options(const mimosel::RunConfigFile& cfg, const CommonArgs& args) {
    mimosel::SimOptions opt;
    opt.threads = args.threads;
    opt.sus_grid = cfg.sus_grid;
    opt.sus_tune_trials = cfg.sus_tune_trials;
    if (cfg.sus_alpha) opt.sus_params = mimosel::SusParams{*cfg.sus_alpha, {}};
    return opt;
}

int cmd_kstar(const CommonArgs& args) {
    using namespace mimosel;
    const RunConfigFile cfg = load(args);
    const KStarResult rus = solve_kstar(cfg.system, Scheme::rus);
    const KStarResult lus = solve_kstar(cfg.system, Scheme::lus);

    ResultTable table = make_table(cfg.system, "kstar");
    table.add_column("k");
    table.add_column("rate_rus_approx", "bit/s/Hz");
    table.add_column("rate_lus_approx", "bit/s/Hz");
    const std::size_t rows = std::max(rus.curve.size(), lus.curve.size());
    for (std::size_t i = 0; i < rows; ++i) {
        table.begin_row();
        table.push(static_cast<long long>(i + 1));
        table.push(i < rus.curve.size() ? rus.curve[i] : std::nan(""));
        table.push(i < lus.curve.size() ? lus.curve[i] : std::nan(""));
    }

    nlohmann::json summary{{"command", "kstar"},
                           {"fingerprint", fingerprint_hex(cfg.system)},
                           {"seed", cfg.system.seed},
                           {"k_star_rus", rus.k_star},
                           {"k_star_lus", lus.k_star},
                           {"rate_rus_at_kstar", rus.curve[rus.k_star - 1]},
                           {"rate_lus_at_kstar", lus.curve[lus.k_star - 1]}};
    emit(table, summary, args);
    return 0;
}

int cmd_approx(const CommonArgs& args) {
    using namespace mimosel;
    const RunConfigFile cfg = load(args);
    const bool special_valid = cfg.system.est_error == 0.0 && cfg.system.corr_coef == 0.0;

    ResultTable table = make_table(cfg.system, "approx");
    table.add_column("k");
    table.add_column("rate_rus_approx", "bit/s/Hz");
    table.add_column("rate_lus_approx", "bit/s/Hz");
    table.add_column("rate_rus_special", "bit/s/Hz");
    table.add_column("rate_lus_special", "bit/s/Hz");

    const int k_max = std::min(cfg.system.num_antennas - 1, cfg.system.coherence_symbols - 1);
    for (int k = 1; k <= k_max; ++k) {
        table.begin_row();
        table.push(static_cast<long long>(k));
        table.push(approx_rate_rus(cfg.system, k).value);
        table.push(k <= cfg.system.num_candidates ? approx_rate_lus(cfg.system, k).value
                                                  : std::nan(""));
        table.push(special_valid ? approx_rate_special(cfg.system, k, Scheme::rus).value
                                 : std::nan(""));
        table.push(special_valid && k <= cfg.system.num_candidates
                       ? approx_rate_special(cfg.system, k, Scheme::lus).value
                       : std::nan(""));
    }

    nlohmann::json summary{{"command", "approx"},
                           {"fingerprint", fingerprint_hex(cfg.system)},
                           {"special_case_forms", special_valid}};
    emit(table, summary, args);
    return 0;
}

void push_report(mimosel::ResultTable& table, const mimosel::SimulationReport& report) {
    using mimosel::to_string;
    table.push(to_string(report.scheme));
    table.push(static_cast<long long>(report.active_count));
    table.push(static_cast<long long>(report.k_star));
    table.push(report.mean_sum_rate);
    table.push(report.std_error);
    table.push(report.ci95_half_width);
    table.push(static_cast<long long>(report.trials));
    table.push(static_cast<long long>(report.discarded));
    table.push(report.alpha_sus);
}

nlohmann::json report_json(const mimosel::SimulationReport& report) {
    nlohmann::json j{{"scheme", mimosel::to_string(report.scheme)},
                     {"k", report.active_count},
                     {"k_star", report.k_star},
                     {"mean_rate", report.mean_sum_rate},
                     {"stderr", report.std_error},
                     {"ci95", report.ci95_half_width},
                     {"trials", report.trials},
                     {"discarded", report.discarded},
                     {"discard_warning", report.discard_warning}};
    if (report.scheme == mimosel::Scheme::sus) {
        j["alpha_sus"] = report.alpha_sus;
        j["mean_active"] = report.mean_active;
    }
    return j;
}

int cmd_simulate(const CommonArgs& args, const std::vector<std::string>& scheme_override) {
    using namespace mimosel;
    const RunConfigFile cfg = load(args);
    std::vector<Scheme> schemes = cfg.schemes;
    if (!scheme_override.empty()) {
        schemes.clear();
        for (const std::string& name : scheme_override) schemes.push_back(scheme_from_string(name));
    }

    const SimOptions opt = sim_options(cfg, args);
    ResultTable table = make_table(cfg.system, "simulate");
    table.add_column("scheme");
    table.add_column("k");
    table.add_column("k_star");
    table.add_column("mean_rate", "bit/s/Hz");
    table.add_column("stderr", "bit/s/Hz");
    table.add_column("ci95", "bit/s/Hz");
    table.add_column("trials");
    table.add_column("discarded");
    table.add_column("alpha_sus");

    nlohmann::json rows = nlohmann::json::array();
    for (Scheme scheme : schemes) {
        const SimulationReport report =
            ergodic_rate(cfg.system, scheme, cfg.active_count, cfg.system.trials, opt);
        table.begin_row();
        push_report(table, report);
        rows.push_back(report_json(report));
        if (report.discard_warning)
            std::cerr << "warning: " << to_string(scheme) << " discarded " << report.discarded
                      << " of " << report.trials << " trials (ill-conditioned)\n";
    }

    nlohmann::json summary{{"command", "simulate"},
                           {"fingerprint", fingerprint_hex(cfg.system)},
                           {"seed", cfg.system.seed},
                           {"results", rows}};
    emit(table, summary, args);
    return 0;
}

int cmd_sweep(const CommonArgs& args) {
    using namespace mimosel;
    const RunConfigFile cfg = load(args);
    if (!cfg.sweep_axis) throw ConfigError("config is missing [sweep] axis");
    if (cfg.sweep_values.empty()) throw ConfigError("config is missing [sweep] values");
    const std::vector<Scheme>& schemes =
        cfg.sweep_schemes.empty() ? cfg.schemes : cfg.sweep_schemes;

    const std::vector<SweepRow> rows = sweep(cfg.system, *cfg.sweep_axis, cfg.sweep_values,
                                             schemes, cfg.system.trials, sim_options(cfg, args));

    ResultTable table = make_table(cfg.system, "sweep");
    table.set_meta("axis", to_string(*cfg.sweep_axis));
    table.add_column(to_string(*cfg.sweep_axis));
    table.add_column("scheme");
    table.add_column("k");
    table.add_column("k_star");
    table.add_column("approx_rate", "bit/s/Hz");
    table.add_column("mean_rate", "bit/s/Hz");
    table.add_column("stderr", "bit/s/Hz");
    table.add_column("ci95", "bit/s/Hz");
    table.add_column("trials");
    table.add_column("discarded");
    table.add_column("error");

    nlohmann::json json_rows = nlohmann::json::array();
    for (const SweepRow& row : rows) {
        table.begin_row();
        table.push(row.axis_value);
        table.push(to_string(row.scheme));
        table.push(static_cast<long long>(row.k_used));
        table.push(static_cast<long long>(row.k_star));
        table.push(row.approx_rate);
        table.push(row.report.mean_sum_rate);
        table.push(row.report.std_error);
        table.push(row.report.ci95_half_width);
        table.push(static_cast<long long>(row.report.trials));
        table.push(static_cast<long long>(row.report.discarded));
        table.push(row.error.empty() ? "ok" : row.error);

        nlohmann::json j = report_json(row.report);
        j["axis_value"] = row.axis_value;
        j["approx_rate"] = row.approx_rate;
        if (!row.error.empty()) j["error"] = row.error;
        json_rows.push_back(j);
    }

    nlohmann::json summary{{"command", "sweep"},
                           {"axis", to_string(*cfg.sweep_axis)},
                           {"fingerprint", fingerprint_hex(cfg.system)},
                           {"results", json_rows}};
    emit(table, summary, args);
    return 0;
}

int cmd_fairness(const CommonArgs& args) {
    using namespace mimosel;
    const RunConfigFile cfg = load(args);
    const std::vector<Scheme>& schemes =
        cfg.fairness_schemes.empty() ? cfg.schemes : cfg.fairness_schemes;

    ResultTable table = make_table(cfg.system, "fairness");
    table.add_column("scheme");
    table.add_column("k");
    table.add_column("k_star");
    table.add_column("jfi");
    table.add_column("jfi_window_mean");
    table.add_column("jfi_window_std");
    table.add_column("n_candidates");
    table.add_column("windows");
    table.add_column("slots_per_window");
    table.add_column("discarded_slots");
    table.add_column("alpha_sus");

    nlohmann::json json_rows = nlohmann::json::array();
    for (Scheme scheme : schemes) {
        const FairnessReport report =
            fairness(cfg.system, scheme, cfg.windows, cfg.slots_per_window,
                     sim_options(cfg, args));
        table.begin_row();
        table.push(to_string(scheme));
        table.push(static_cast<long long>(report.active_count));
        table.push(static_cast<long long>(report.k_star));
        table.push(report.jfi);
        table.push(report.jfi_window_mean);
        table.push(report.jfi_window_std);
        table.push(static_cast<long long>(cfg.system.num_candidates));
        table.push(static_cast<long long>(report.windows));
        table.push(static_cast<long long>(report.slots_per_window));
        table.push(report.discarded_slots);
        table.push(report.alpha_sus);

        nlohmann::json j{{"scheme", to_string(scheme)},
                         {"k", report.active_count},
                         {"k_star", report.k_star},
                         {"jfi", report.jfi},
                         {"jfi_window_mean", report.jfi_window_mean},
                         {"jfi_window_std", report.jfi_window_std},
                         {"avg_rate_by_rank", std::vector<double>(
                                                  report.avg_rate_by_rank.begin(),
                                                  report.avg_rate_by_rank.end())},
                         {"selection_freq_by_rank",
                          std::vector<double>(report.selection_freq.begin(),
                                              report.selection_freq.end())}};
        json_rows.push_back(j);
    }

    nlohmann::json summary{
        {"command", "fairness"},
        {"fingerprint", fingerprint_hex(cfg.system)},
        {"note", "candidates are indexed by distance rank within each window; jfi applies "
                 "Jain's formula to the window-aggregated per-rank rates, jfi_window_mean "
                 "averages the per-window index"},
        {"results", json_rows}};
    emit(table, summary, args);
    return 0;
}

int cmd_validate(const CommonArgs& args, bool assert_limits) {
    using namespace mimosel;
    const RunConfigFile cfg = load(args);

    ResultTable table = make_table(cfg.system, "validate");
    table.add_column("m");
    table.add_column("k");
    table.add_column("rel_err_gamma2");
    table.add_column("rel_err_quadform");
    table.add_column("gamma2_sim", "mW");
    table.add_column("gamma2_limit", "mW");
    table.add_column("quadform_sim");
    table.add_column("quadform_limit");
    table.add_column("draws");
    table.add_column("discarded");

    std::vector<AppendixReport> reports;
    for (int m : cfg.validate_antennas) {
        SystemConfig point = cfg.system;
        point.num_antennas = m;
        point.num_candidates = std::max(point.num_candidates, m);
        const int k = std::max(1, m / cfg.validate_k_divisor);
        const AppendixReport report = validate_appendix(point, k, cfg.validate_draws);
        reports.push_back(report);
        table.begin_row();
        table.push(static_cast<long long>(m));
        table.push(static_cast<long long>(k));
        table.push(report.rel_err_gamma_sq);
        table.push(report.rel_err_quadform);
        table.push(report.gamma_sq_mean);
        table.push(report.gamma_sq_limit);
        table.push(report.quadform_mean);
        table.push(report.quadform_limit);
        table.push(static_cast<long long>(report.trials));
        table.push(static_cast<long long>(report.discarded));
    }

    bool ok = true;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].rel_err_gamma_sq > reports[i - 1].rel_err_gamma_sq) ok = false;
        if (reports[i].rel_err_quadform > reports[i - 1].rel_err_quadform) ok = false;
    }
    if (!reports.empty()) {
        if (reports.back().rel_err_gamma_sq > cfg.validate_max_rel_err) ok = false;
        if (reports.back().rel_err_quadform > cfg.validate_max_rel_err) ok = false;
    }

    nlohmann::json summary{{"command", "validate"},
                           {"fingerprint", fingerprint_hex(cfg.system)},
                           {"limits_met", ok},
                           {"max_rel_err", cfg.validate_max_rel_err}};
    emit(table, summary, args);

    if (assert_limits && !ok) {
        std::cerr << "validate: convergence limits not met\n";
        return kExitAssertFailed;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Downlink user selection for massive MIMO with ZF precoding"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    CommonArgs kstar_args, approx_args, simulate_args, sweep_args, fairness_args, validate_args;
    std::vector<std::string> scheme_override;
    bool assert_limits = false;

    add_common(app.add_subcommand("kstar", "offline K* search for both scheme families"),
               kstar_args, false);
    add_common(app.add_subcommand("approx", "deterministic rate approximations over K"),
               approx_args, false);
    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo ergodic sum rate per scheme");
    add_common(simulate, simulate_args);
    simulate->add_option("--scheme", scheme_override,
                         "schemes to simulate (overrides the config list)");
    add_common(app.add_subcommand("sweep", "parameter sweep from the [sweep] block"), sweep_args);
    add_common(app.add_subcommand("fairness", "Jain fairness over coherence windows"),
               fairness_args);
    CLI::App* validate =
        app.add_subcommand("validate", "large-system limit convergence checks");
    add_common(validate, validate_args);
    validate->add_flag("--assert", assert_limits,
                       "exit 4 when the convergence limits are not met");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("kstar")) return cmd_kstar(kstar_args);
        if (app.got_subcommand("approx")) return cmd_approx(approx_args);
        if (app.got_subcommand("simulate")) return cmd_simulate(simulate_args, scheme_override);
        if (app.got_subcommand("sweep")) return cmd_sweep(sweep_args);
        if (app.got_subcommand("fairness")) return cmd_fairness(fairness_args);
        if (app.got_subcommand("validate")) return cmd_validate(validate_args, assert_limits);
    } catch (const mimosel::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return 0;
}
