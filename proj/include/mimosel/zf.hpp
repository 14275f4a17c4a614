#pragma once

#include <Eigen/Dense>

#include "mimosel/channel.hpp"
#include "mimosel/correlation.hpp"

namespace mimosel {

/// Zero-forcing precoder for one realization: precoder = G_hat^H (G_hat G_hat^H)^{-1},
/// scaled so the long-term power constraint gamma^2 tr((G_hat G_hat^H)^{-1}) = P
/// is met with equality.
struct PrecoderOutput {
    double gamma_sq = 0.0;        ///< mW
    Eigen::MatrixXcd precoder;    ///< M x K, unscaled pseudo-inverse
    double gram_condition = 0.0;  ///< condition number of G_hat G_hat^H
};

/// Per-user SINR and rates for one realization.
struct LinkResult {
    Eigen::VectorXd sinr;
    Eigen::VectorXd per_user_rate;  ///< log2(1 + SINR_k), bits/s/Hz
    double prelog = 0.0;            ///< fraction of the slot carrying data
    double sum_rate = 0.0;          ///< prelog * sum(per_user_rate)
};

/// Computes the ZF precoder through the K x K Gram matrix (never an M x M
/// inverse). Throws IllConditionedError when the Gram condition number
/// exceeds cond_limit; Monte Carlo callers discard and count, single-shot
/// callers abort.
PrecoderOutput zf_precode(const ChannelRealization& ch, double p_linear_mw,
                          double cond_limit = 1e12);

/// Per-user SINR with the symbol covariance taken at its expectation I_K:
/// SINR_k = gamma^2 / (noise + lsf_k * gamma^2 * |ssf_err_k R^{1/2} W|^2).
LinkResult evaluate_link(const ChannelRealization& ch, const PrecoderOutput& pre,
                         const CorrelationModel& corr, double noise_mw, double prelog);

} // namespace mimosel
