#include "mimosel/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mimosel/channel.hpp"
#include "mimosel/correlation.hpp"
#include "mimosel/errors.hpp"
#include "mimosel/parallel.hpp"
#include "mimosel/placement.hpp"
#include "mimosel/rate_approx.hpp"
#include "mimosel/rng.hpp"
#include "mimosel/zf.hpp"

namespace mimosel {

namespace {

constexpr std::uint64_t kSusTuneTag = 0x7375732d74756e65ull;   // "sus-tune"
constexpr std::uint64_t kFairnessTag = 0x6661697277696e00ull;  // "fairwin"
constexpr double kDiscardWarnRatio = 1e-4;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TrialOutcome {
    double sum_rate = 0.0;
    int served = 0;
    bool ok = false;
};

/// One full selection -> precoding -> rate evaluation pass driven by the
/// given stream. Draw order: placement, selection, active-set channel
/// (SUS draws the whole candidate set before selecting).
TrialOutcome run_trial(const SystemConfig& cfg, const CorrelationModel& corr, Scheme scheme,
                       int k_active, double alpha_sus, double cond_limit, RngStream& rng) {
    const UserPlacement placement = sample_placement(cfg, rng);

    SelectionDecision decision;
    ChannelRealization active;
    if (scheme == Scheme::sus) {
        const ChannelRealization all =
            draw_channel(cfg, corr, placement.radii, rng);
        decision = select_sus(all.composite_est, SusParams{alpha_sus, {}},
                              cfg.coherence_symbols, cfg.num_antennas);
        active = select_rows(all, decision.active_indices);
    } else {
        decision = is_lus_family(scheme)
                       ? select_lus(k_active, placement, cfg.coherence_symbols)
                       : select_rus(k_active, cfg.num_candidates, cfg.coherence_symbols, rng);
        Eigen::VectorXd distances(decision.active_count());
        for (int i = 0; i < decision.active_count(); ++i)
            distances[i] = placement.radii[decision.active_indices[i]];
        active = draw_channel(cfg, corr, distances, rng);
    }

    TrialOutcome outcome;
    outcome.served = decision.active_count();
    try {
        const PrecoderOutput pre = zf_precode(active, cfg.tx_power_mw(), cond_limit);
        const LinkResult link =
            evaluate_link(active, pre, corr, cfg.noise_power_mw(), decision.pilot_prelog);
        outcome.sum_rate = link.sum_rate;
        outcome.ok = true;
    } catch (const IllConditionedError&) {
        outcome.ok = false;
    }
    return outcome;
}

struct MeanStderr {
    double mean = 0.0;
    double std_error = 0.0;
    int used = 0;
};

MeanStderr reduce_outcomes(const std::vector<TrialOutcome>& outcomes) {
    MeanStderr stats;
    double sum = 0.0;
    for (const TrialOutcome& o : outcomes)
        if (o.ok) {
            sum += o.sum_rate;
            ++stats.used;
        }
    if (stats.used == 0) {
        stats.mean = kNaN;
        stats.std_error = kNaN;
        return stats;
    }
    stats.mean = sum / stats.used;
    double sq = 0.0;
    for (const TrialOutcome& o : outcomes)
        if (o.ok) sq += (o.sum_rate - stats.mean) * (o.sum_rate - stats.mean);
    if (stats.used > 1)
        stats.std_error = std::sqrt(sq / (stats.used - 1)) / std::sqrt(double(stats.used));
    return stats;
}

double mean_rate_for_alpha(const SystemConfig& cfg, const CorrelationModel& corr, double alpha,
                           int n_trials, int threads, double cond_limit, double* std_error) {
    const std::uint64_t tune_seed = derive_seed(cfg.seed, kSusTuneTag);
    std::vector<TrialOutcome> outcomes(n_trials);
    parallel_for(n_trials, threads, [&](std::size_t t) {
        RngStream rng = RngStream::for_trial(tune_seed, t);
        outcomes[t] = run_trial(cfg, corr, Scheme::sus, 0, alpha, cond_limit, rng);
    });
    const MeanStderr stats = reduce_outcomes(outcomes);
    if (std_error) *std_error = stats.std_error;
    return stats.mean;
}

} // namespace

double jain_index(const Eigen::VectorXd& x) {
    const double sum = x.sum();
    const double sum_sq = x.squaredNorm();
    if (sum_sq == 0.0) return 0.0;
    return sum * sum / (static_cast<double>(x.size()) * sum_sq);
}

int resolve_active_count(const SystemConfig& cfg, Scheme scheme, std::optional<int> k_request) {
    if (k_request) {
        if (*k_request < 1 || *k_request > cfg.num_candidates ||
            *k_request > cfg.num_antennas || *k_request >= cfg.coherence_symbols)
            throw ConfigError("requested K violates 1 <= K <= min(M, N), K < T");
        return *k_request;
    }
    if (uses_kstar(scheme))
        return solve_kstar(cfg, scheme).k_star;
    return std::min(cfg.num_antennas, cfg.coherence_symbols - 1);
}

SusParams tune_alpha_sus(const SystemConfig& cfg, const std::vector<double>& grid, int n_trials,
                         int threads, SusTuneDiagnostics* diagnostics) {
    cfg.validate();
    if (grid.empty()) throw ConfigError("alpha_sus grid must not be empty");
    for (double a : grid)
        if (!(a > 0.0 && a <= 1.0)) throw ConfigError("alpha_sus grid values must lie in (0,1]");

    const CorrelationModel corr = build_correlation(cfg.num_antennas, cfg.corr_coef);
    if (diagnostics) {
        diagnostics->mean_rate.clear();
        diagnostics->std_error.clear();
    }

    double best_alpha = grid.front();
    double best_rate = -std::numeric_limits<double>::infinity();
    for (double alpha : grid) {
        double se = 0.0;
        const double rate = mean_rate_for_alpha(cfg, corr, alpha, n_trials, threads,
                                                1e12, &se);
        if (diagnostics) {
            diagnostics->mean_rate.push_back(rate);
            diagnostics->std_error.push_back(se);
        }
        if (rate > best_rate) {
            best_rate = rate;
            best_alpha = alpha;
        }
    }

    SusParams params;
    params.alpha_sus = best_alpha;
    params.grid = grid;
    return params;
}

SimulationReport ergodic_rate(const SystemConfig& cfg, Scheme scheme, std::optional<int> k_request,
                              int trials, const SimOptions& opt) {
    cfg.validate();
    if (trials < 1) throw ConfigError("trials must be >= 1");

    SimulationReport report;
    report.scheme = scheme;
    report.config_fingerprint = config_fingerprint(cfg);
    report.trials = trials;
    report.alpha_sus = kNaN;
    report.mean_active = kNaN;

    if (uses_kstar(scheme)) {
        report.k_star = solve_kstar(cfg, scheme).k_star;
        report.active_count = k_request.value_or(report.k_star);
    } else if (scheme == Scheme::sus) {
        report.active_count = cfg.num_antennas;
    } else {
        report.active_count = resolve_active_count(cfg, scheme, k_request);
    }

    double alpha_sus = 0.0;
    if (scheme == Scheme::sus) {
        if (opt.sus_params) {
            alpha_sus = opt.sus_params->alpha_sus;
        } else {
            const std::vector<double> grid =
                opt.sus_grid.empty() ? default_alpha_grid() : opt.sus_grid;
            alpha_sus = tune_alpha_sus(cfg, grid, opt.sus_tune_trials, opt.threads).alpha_sus;
        }
        report.alpha_sus = alpha_sus;
    }

    const CorrelationModel corr = build_correlation(cfg.num_antennas, cfg.corr_coef);
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, opt.threads, [&](std::size_t t) {
        RngStream rng = RngStream::for_trial(cfg.seed, t);
        outcomes[t] =
            run_trial(cfg, corr, scheme, report.active_count, alpha_sus, opt.cond_limit, rng);
    });

    const MeanStderr stats = reduce_outcomes(outcomes);
    report.discarded = trials - stats.used;
    report.mean_sum_rate = stats.mean;
    report.std_error = stats.std_error;
    report.ci95_half_width = 1.96 * stats.std_error;
    report.discard_warning =
        static_cast<double>(report.discarded) / trials > kDiscardWarnRatio;
    if (scheme == Scheme::sus && stats.used > 0) {
        long long served = 0;
        for (const TrialOutcome& o : outcomes)
            if (o.ok) served += o.served;
        report.mean_active = static_cast<double>(served) / stats.used;
    }
    return report;
}

FairnessReport fairness(const SystemConfig& cfg, Scheme scheme, int windows, int slots_per_window,
                        const SimOptions& opt) {
    cfg.validate();
    if (windows < 1 || slots_per_window < 1)
        throw ConfigError("fairness requires windows >= 1 and slots_per_window >= 1");

    const int n = cfg.num_candidates;
    FairnessReport report;
    report.scheme = scheme;
    report.windows = windows;
    report.slots_per_window = slots_per_window;
    report.config_fingerprint = config_fingerprint(cfg);
    report.alpha_sus = kNaN;

    if (uses_kstar(scheme)) {
        report.k_star = solve_kstar(cfg, scheme).k_star;
        report.active_count = report.k_star;
    } else {
        report.active_count = resolve_active_count(cfg, scheme, std::nullopt);
    }

    double alpha_sus = 0.0;
    if (scheme == Scheme::sus) {
        if (opt.sus_params) {
            alpha_sus = opt.sus_params->alpha_sus;
        } else {
            const std::vector<double> grid =
                opt.sus_grid.empty() ? default_alpha_grid() : opt.sus_grid;
            alpha_sus = tune_alpha_sus(cfg, grid, opt.sus_tune_trials, opt.threads).alpha_sus;
        }
        report.alpha_sus = alpha_sus;
    }

    const CorrelationModel corr = build_correlation(cfg.num_antennas, cfg.corr_coef);
    const std::uint64_t fairness_seed = derive_seed(cfg.seed, kFairnessTag);

    struct WindowAccum {
        Eigen::VectorXd rate;
        Eigen::VectorXd selections;
        long long discarded = 0;
    };
    std::vector<WindowAccum> accum(windows);

    parallel_for(windows, opt.threads, [&](std::size_t w) {
        RngStream rng = RngStream::for_trial(fairness_seed, w);
        WindowAccum& acc = accum[w];
        acc.rate = Eigen::VectorXd::Zero(n);
        acc.selections = Eigen::VectorXd::Zero(n);

        const UserPlacement placement = sample_placement(cfg, rng);

        // Distance rank of each candidate within this window (0 = nearest).
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (placement.radii[a] != placement.radii[b])
                return placement.radii[a] < placement.radii[b];
            return a < b;
        });
        std::vector<int> rank_of(n);
        for (int r = 0; r < n; ++r) rank_of[order[r]] = r;

        for (int slot = 0; slot < slots_per_window; ++slot) {
            SelectionDecision decision;
            ChannelRealization active;
            if (scheme == Scheme::sus) {
                const ChannelRealization all = draw_channel(cfg, corr, placement.radii, rng);
                decision = select_sus(all.composite_est, SusParams{alpha_sus, {}},
                                      cfg.coherence_symbols, cfg.num_antennas);
                active = select_rows(all, decision.active_indices);
            } else {
                decision = is_lus_family(scheme)
                               ? select_lus(report.active_count, placement, cfg.coherence_symbols)
                               : select_rus(report.active_count, n, cfg.coherence_symbols, rng);
                Eigen::VectorXd distances(decision.active_count());
                for (int i = 0; i < decision.active_count(); ++i)
                    distances[i] = placement.radii[decision.active_indices[i]];
                active = draw_channel(cfg, corr, distances, rng);
            }

            try {
                const PrecoderOutput pre = zf_precode(active, cfg.tx_power_mw(), opt.cond_limit);
                const LinkResult link = evaluate_link(active, pre, corr, cfg.noise_power_mw(),
                                                      decision.pilot_prelog);
                for (int i = 0; i < decision.active_count(); ++i) {
                    const int rank = rank_of[decision.active_indices[i]];
                    acc.rate[rank] += link.prelog * link.per_user_rate[i];
                    acc.selections[rank] += 1.0;
                }
            } catch (const IllConditionedError&) {
                ++acc.discarded;
            }
        }
    });

    Eigen::VectorXd total_rate = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd total_sel = Eigen::VectorXd::Zero(n);
    double jfi_sum = 0.0, jfi_sq = 0.0;
    for (const WindowAccum& acc : accum) {
        total_rate += acc.rate;
        total_sel += acc.selections;
        report.discarded_slots += acc.discarded;
        const double w_jfi = jain_index(acc.rate);
        jfi_sum += w_jfi;
        jfi_sq += w_jfi * w_jfi;
    }

    const double total_slots = static_cast<double>(windows) * slots_per_window;
    report.avg_rate_by_rank = total_rate / total_slots;
    report.selection_freq = total_sel / total_slots;
    report.jfi = jain_index(report.avg_rate_by_rank);
    report.jfi_window_mean = jfi_sum / windows;
    report.jfi_window_std =
        windows > 1 ? std::sqrt(std::max(0.0, (jfi_sq - jfi_sum * jfi_sum / windows) /
                                                  (windows - 1)))
                    : 0.0;
    return report;
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::power_dbm: return "power_dbm";
        case SweepAxis::candidates: return "candidates";
        case SweepAxis::active_count: return "active_k";
        case SweepAxis::est_error: return "rho";
        case SweepAxis::corr_coef: return "delta";
    }
    return "unknown";
}

SweepAxis sweep_axis_from_string(const std::string& name) {
    if (name == "power_dbm") return SweepAxis::power_dbm;
    if (name == "candidates" || name == "candidates_n") return SweepAxis::candidates;
    if (name == "active_k") return SweepAxis::active_count;
    if (name == "rho") return SweepAxis::est_error;
    if (name == "delta") return SweepAxis::corr_coef;
    throw ConfigError("unknown sweep axis '" + name +
                      "' (expected power_dbm, candidates, active_k, rho or delta)");
}

std::vector<SweepRow> sweep(const SystemConfig& cfg, SweepAxis axis,
                            const std::vector<double>& values, const std::vector<Scheme>& schemes,
                            int trials, const SimOptions& opt) {
    cfg.validate();
    std::vector<SweepRow> rows;
    for (double value : values) {
        SystemConfig point = cfg;
        std::optional<int> k_request;
        switch (axis) {
            case SweepAxis::power_dbm: point.tx_power_dbm = value; break;
            case SweepAxis::candidates: point.num_candidates = static_cast<int>(value); break;
            case SweepAxis::active_count: k_request = static_cast<int>(value); break;
            case SweepAxis::est_error: point.est_error = value; break;
            case SweepAxis::corr_coef: point.corr_coef = value; break;
        }

        for (Scheme scheme : schemes) {
            SweepRow row;
            row.axis_value = value;
            row.scheme = scheme;
            row.approx_rate = kNaN;
            try {
                point.validate();
                row.report = ergodic_rate(point, scheme, k_request, trials, opt);
                row.k_used = row.report.active_count;
                row.k_star = row.report.k_star;
                if (is_rus_family(scheme) && row.k_used < point.num_antennas)
                    row.approx_rate = approx_rate_rus(point, row.k_used).value;
                else if (is_lus_family(scheme) && row.k_used < point.num_antennas &&
                         row.k_used <= point.num_candidates)
                    row.approx_rate = approx_rate_lus(point, row.k_used).value;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace mimosel
