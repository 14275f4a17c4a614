#include "mimosel/zf.hpp"

#include <cmath>
#include <limits>

#include "mimosel/errors.hpp"

namespace mimosel {

PrecoderOutput zf_precode(const ChannelRealization& ch, double p_linear_mw, double cond_limit) {
    const Eigen::Index k = ch.active_count();
    const Eigen::Index m = ch.antenna_count();
    if (k < 1 || k > m) throw ConfigError("zf_precode requires 1 <= K <= M");

    const Eigen::MatrixXcd gram = ch.composite_est * ch.composite_est.adjoint();

    // One Hermitian eigendecomposition yields the condition number, the
    // inverse trace and the precoder.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    const Eigen::VectorXd& lam = solver.eigenvalues();  // ascending
    const double lam_min = lam[0];
    const double lam_max = lam[k - 1];
    const double condition = (lam_min > 0.0 && std::isfinite(lam_max))
                                 ? lam_max / lam_min
                                 : std::numeric_limits<double>::infinity();
    if (!(condition <= cond_limit)) throw IllConditionedError(condition);

    const Eigen::MatrixXcd gram_inv = solver.eigenvectors() *
                                      lam.cwiseInverse().asDiagonal() *
                                      solver.eigenvectors().adjoint();

    PrecoderOutput out;
    out.gram_condition = condition;
    out.gamma_sq = p_linear_mw / lam.cwiseInverse().sum();
    out.precoder = ch.composite_est.adjoint() * gram_inv;
    return out;
}

LinkResult evaluate_link(const ChannelRealization& ch, const PrecoderOutput& pre,
                         const CorrelationModel& corr, double noise_mw, double prelog) {
    const Eigen::Index k = ch.active_count();

    // Error-channel interference image: rows are ssf_err_k R^{1/2} W.
    Eigen::MatrixXcd err_image;
    if (corr.is_identity())
        err_image = ch.ssf_err * pre.precoder;
    else
        err_image = (ch.ssf_err * corr.sqrt_matrix) * pre.precoder;

    LinkResult link;
    link.sinr.resize(k);
    link.per_user_rate.resize(k);
    link.prelog = prelog;
    double total = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
        const double interference = ch.lsf[i] * pre.gamma_sq * err_image.row(i).squaredNorm();
        link.sinr[i] = pre.gamma_sq / (noise_mw + interference);
        link.per_user_rate[i] = std::log2(1.0 + link.sinr[i]);
        total += link.per_user_rate[i];
    }
    link.sum_rate = prelog * total;
    return link;
}

} // namespace mimosel
