#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mimosel/correlation.hpp"
#include "mimosel/rng.hpp"
#include "mimosel/system_config.hpp"

namespace mimosel {

/// One draw of the downlink channel for a set of active users:
/// composite = lsf^{1/2} * ssf * R^{1/2}, with the small-scale matrix split
/// into an estimate carrying variance (1-rho) and an error carrying rho.
struct ChannelRealization {
    Eigen::VectorXd distances;       ///< meters, one per active user
    Eigen::VectorXd lsf;             ///< beta_k = c * d_k^{-alpha}
    Eigen::MatrixXcd ssf;            ///< H, K x M, CN(0,1) entries
    Eigen::MatrixXcd ssf_est;        ///< H_hat = sqrt(1-rho) Z1
    Eigen::MatrixXcd ssf_err;        ///< H_tilde = sqrt(rho) Z2
    Eigen::MatrixXcd composite;      ///< G
    Eigen::MatrixXcd composite_est;  ///< G_hat

    Eigen::Index active_count() const { return composite.rows(); }
    Eigen::Index antenna_count() const { return composite.cols(); }
};

/// Large-scale fading coefficient beta = c * d^{-alpha}.
double pathloss(double c, double d, double alpha);

/// Draws small-scale fading for the given user distances and assembles all
/// derived matrices. Distances must lie within [r_min, r_max]; the row count
/// may be anything up to num_candidates (selection against the full
/// candidate set draws N rows).
ChannelRealization draw_channel(const SystemConfig& cfg, const CorrelationModel& corr,
                                const Eigen::VectorXd& active_distances, RngStream& rng);

/// Restriction of a candidate-set realization to the selected rows.
ChannelRealization select_rows(const ChannelRealization& full, const std::vector<int>& indices);

} // namespace mimosel
