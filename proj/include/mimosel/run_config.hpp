#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "mimosel/scheme.hpp"
#include "mimosel/sim.hpp"
#include "mimosel/system_config.hpp"

namespace mimosel {

/// Parsed run configuration: the system parameters plus per-command blocks.
/// The file format is sectioned key = value text ([system], [simulate],
/// [sweep], [fairness], [sus], [validate]); unknown sections or keys are
/// hard errors so typos cannot silently fall back to defaults.
struct RunConfigFile {
    SystemConfig system;

    // [simulate]
    std::vector<Scheme> schemes = {Scheme::kstar_rus, Scheme::kstar_lus, Scheme::rus,
                                   Scheme::sus};
    std::optional<int> active_count;

    // [sweep]
    std::optional<SweepAxis> sweep_axis;
    std::vector<double> sweep_values;
    std::vector<Scheme> sweep_schemes;  ///< empty = fall back to schemes

    // [fairness]
    int windows = 100;
    int slots_per_window = 100;
    std::vector<Scheme> fairness_schemes;  ///< empty = fall back to schemes

    // [sus]
    std::vector<double> sus_grid;      ///< empty = default 0.05..1.00
    int sus_tune_trials = 400;
    std::optional<double> sus_alpha;   ///< fixed threshold, skips tuning

    // [validate]
    std::vector<int> validate_antennas = {32, 64, 128};
    int validate_draws = 2000;
    int validate_k_divisor = 4;       ///< K = M / divisor per point
    double validate_max_rel_err = 0.05;
};

RunConfigFile parse_run_config(std::istream& in);
RunConfigFile load_run_config(const std::string& path);

} // namespace mimosel
