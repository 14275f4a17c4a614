#include "mimosel/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mimosel/errors.hpp"
#include "mimosel/rate_approx.hpp"

namespace mimosel {

namespace {

double data_prelog(int k_active, int coherence_symbols) {
    return 1.0 - static_cast<double>(k_active) / coherence_symbols;
}

} // namespace

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) grid.push_back(0.05 * i);
    return grid;
}

KStarResult solve_kstar(const SystemConfig& cfg, Scheme family) {
    cfg.validate();
    const bool lus = is_lus_family(family);
    if (!lus && !is_rus_family(family))
        throw ConfigError("K* search is defined for the RUS and LUS families");

    int k_max = std::min(cfg.num_antennas - 1, cfg.coherence_symbols - 1);
    if (lus) k_max = std::min(k_max, cfg.num_candidates);
    if (k_max < 1) throw ConfigError("no admissible K for the K* search");

    KStarResult result;
    result.scheme = lus ? Scheme::lus : Scheme::rus;
    result.config_fingerprint = config_fingerprint(cfg);
    result.curve.resize(k_max);
    int best = 1;
    for (int k = 1; k <= k_max; ++k) {
        result.curve[k - 1] =
            lus ? approx_rate_lus(cfg, k).value : approx_rate_rus(cfg, k).value;
        if (result.curve[k - 1] > result.curve[best - 1]) best = k;
    }
    result.k_star = best;
    return result;
}

SelectionDecision select_rus(int k_active, int num_candidates, int coherence_symbols,
                             RngStream& rng) {
    if (k_active < 1 || k_active > num_candidates)
        throw ConfigError("select_rus requires 1 <= K <= N");

    std::vector<int> pool(num_candidates);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k_active; ++i) {
        const int j = i + static_cast<int>(rng.uniform_below(num_candidates - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k_active);

    SelectionDecision decision;
    decision.scheme = Scheme::rus;
    decision.active_indices = std::move(pool);
    decision.pilot_prelog = data_prelog(k_active, coherence_symbols);
    return decision;
}

SelectionDecision select_lus(int k_active, const UserPlacement& placement,
                             int coherence_symbols) {
    const int n = static_cast<int>(placement.size());
    if (k_active < 1 || k_active > n) throw ConfigError("select_lus requires 1 <= K <= N");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (placement.radii[a] != placement.radii[b])
            return placement.radii[a] < placement.radii[b];
        return a < b;
    });
    order.resize(k_active);

    SelectionDecision decision;
    decision.scheme = Scheme::lus;
    decision.active_indices = std::move(order);
    decision.pilot_prelog = data_prelog(k_active, coherence_symbols);
    return decision;
}

SelectionDecision select_sus(const Eigen::MatrixXcd& candidates_est, const SusParams& params,
                             int coherence_symbols, int max_users) {
    const int n = static_cast<int>(candidates_est.rows());
    if (n < 1) throw ConfigError("select_sus requires at least one candidate");
    if (max_users < 1) throw ConfigError("select_sus requires max_users >= 1");

    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);

    // Residuals start as the raw channel rows and lose the component along
    // each chosen direction, so the argmax below is the norm of the
    // projection onto the orthogonal complement of the chosen span.
    std::vector<Eigen::RowVectorXcd> residual(n);
    for (int i = 0; i < n; ++i) residual[i] = candidates_est.row(i);

    SelectionDecision decision;
    decision.scheme = Scheme::sus;
    while (!pool.empty() && decision.active_count() < max_users) {
        int best = pool[0];
        double best_norm = residual[best].squaredNorm();
        for (int idx : pool) {
            const double norm = residual[idx].squaredNorm();
            if (norm > best_norm) {
                best = idx;
                best_norm = norm;
            }
        }
        decision.active_indices.push_back(best);
        if (best_norm <= 0.0) break;  // degenerate all-zero candidates

        const Eigen::RowVectorXcd direction = residual[best];
        std::vector<int> next_pool;
        next_pool.reserve(pool.size());
        for (int idx : pool) {
            if (idx == best) continue;
            const std::complex<double> overlap =
                (candidates_est.row(idx) * direction.adjoint()).value();
            const double correlation =
                std::abs(overlap) / (candidates_est.row(idx).norm() * direction.norm());
            if (correlation < params.alpha_sus) {
                const std::complex<double> coeff =
                    (residual[idx] * direction.adjoint()).value() / best_norm;
                residual[idx] -= coeff * direction;
                next_pool.push_back(idx);
            }
        }
        pool = std::move(next_pool);
    }

    decision.pilot_prelog = std::max(0.0, 1.0 - static_cast<double>(n) / coherence_symbols);
    return decision;
}

} // namespace mimosel
