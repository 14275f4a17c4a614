#include "mimosel/run_config.hpp"

#include <fstream>
#include <sstream>

#include "mimosel/errors.hpp"
#include "mimosel/table.hpp"

namespace mimosel {

namespace {

std::string strip(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

long long parse_int(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected integer, got '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected unsigned integer, got '" + value +
                          "'");
    }
}

double parse_real(const std::string& value, const std::string& key) {
    try {
        return parse_double(value);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected number, got '" + value + "'");
    }
}

std::vector<Scheme> parse_schemes(const std::string& value) {
    std::vector<Scheme> schemes;
    for (const std::string& item : split_list(value)) schemes.push_back(scheme_from_string(item));
    if (schemes.empty()) throw ConfigError("scheme list must not be empty");
    return schemes;
}

} // namespace

RunConfigFile parse_run_config(std::istream& in) {
    RunConfigFile cfg;
    std::string section;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = strip(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
            section = strip(line.substr(1, line.size() - 2));
            if (section != "system" && section != "simulate" && section != "sweep" &&
                section != "fairness" && section != "sus" && section != "validate")
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" +
                                  section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");

        if (section == "system") {
            if (key == "num_antennas") cfg.system.num_antennas = static_cast<int>(parse_int(value, key));
            else if (key == "num_candidates") cfg.system.num_candidates = static_cast<int>(parse_int(value, key));
            else if (key == "coherence_symbols") cfg.system.coherence_symbols = static_cast<int>(parse_int(value, key));
            else if (key == "tx_power_dbm") cfg.system.tx_power_dbm = parse_real(value, key);
            else if (key == "noise_power_dbm") cfg.system.noise_power_dbm = parse_real(value, key);
            else if (key == "pathloss_ref") cfg.system.pathloss_ref = parse_real(value, key);
            else if (key == "pathloss_exp") cfg.system.pathloss_exp = parse_real(value, key);
            else if (key == "est_error") cfg.system.est_error = parse_real(value, key);
            else if (key == "corr_coef") cfg.system.corr_coef = parse_real(value, key);
            else if (key == "r_min") cfg.system.r_min = parse_real(value, key);
            else if (key == "r_max") cfg.system.r_max = parse_real(value, key);
            else if (key == "seed") cfg.system.seed = parse_u64(value, key);
            else if (key == "trials") cfg.system.trials = static_cast<int>(parse_int(value, key));
            else throw ConfigError("unknown key '" + key + "' in [system]");
        } else if (section == "simulate") {
            if (key == "schemes") cfg.schemes = parse_schemes(value);
            else if (key == "active_k") cfg.active_count = static_cast<int>(parse_int(value, key));
            else throw ConfigError("unknown key '" + key + "' in [simulate]");
        } else if (section == "sweep") {
            if (key == "axis") cfg.sweep_axis = sweep_axis_from_string(value);
            else if (key == "values") {
                cfg.sweep_values.clear();
                for (const std::string& item : split_list(value))
                    cfg.sweep_values.push_back(parse_real(item, key));
                if (cfg.sweep_values.empty()) throw ConfigError("sweep values must not be empty");
            } else if (key == "schemes") cfg.sweep_schemes = parse_schemes(value);
            else throw ConfigError("unknown key '" + key + "' in [sweep]");
        } else if (section == "fairness") {
            if (key == "windows") cfg.windows = static_cast<int>(parse_int(value, key));
            else if (key == "slots_per_window") cfg.slots_per_window = static_cast<int>(parse_int(value, key));
            else if (key == "schemes") cfg.fairness_schemes = parse_schemes(value);
            else throw ConfigError("unknown key '" + key + "' in [fairness]");
        } else if (section == "sus") {
            if (key == "alpha_grid") {
                cfg.sus_grid.clear();
                for (const std::string& item : split_list(value))
                    cfg.sus_grid.push_back(parse_real(item, key));
            } else if (key == "tune_trials") cfg.sus_tune_trials = static_cast<int>(parse_int(value, key));
            else if (key == "alpha") cfg.sus_alpha = parse_real(value, key);
            else throw ConfigError("unknown key '" + key + "' in [sus]");
        } else if (section == "validate") {
            if (key == "antennas") {
                cfg.validate_antennas.clear();
                for (const std::string& item : split_list(value))
                    cfg.validate_antennas.push_back(static_cast<int>(parse_int(item, key)));
                if (cfg.validate_antennas.empty())
                    throw ConfigError("validate antennas must not be empty");
            } else if (key == "ssf_draws") cfg.validate_draws = static_cast<int>(parse_int(value, key));
            else if (key == "k_divisor") cfg.validate_k_divisor = static_cast<int>(parse_int(value, key));
            else if (key == "max_rel_err") cfg.validate_max_rel_err = parse_real(value, key);
            else throw ConfigError("unknown key '" + key + "' in [validate]");
        } else {
            throw ConfigError("line " + std::to_string(line_no) +
                              ": key outside of any section");
        }
    }

    cfg.system.validate();
    return cfg;
}

RunConfigFile load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    return parse_run_config(in);
}

} // namespace mimosel
