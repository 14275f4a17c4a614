#pragma once

#include <Eigen/Dense>

namespace mimosel {

/// Exponential (Kac-Murdock-Szego) transmit correlation model
/// R[i][j] = delta^|i-j|, together with its eigenvalues and symmetric
/// square root. R is fixed per (dimension, delta), so everything is
/// computed once at construction and reused across trials.
struct CorrelationModel {
    double delta = 0.0;
    int dim = 0;
    Eigen::MatrixXd matrix;       ///< R
    Eigen::VectorXd eigenvalues;  ///< ascending, all positive for delta in [0,1)
    Eigen::MatrixXd sqrt_matrix;  ///< symmetric R^{1/2}

    bool is_identity() const { return delta == 0.0; }
};

/// Builds the correlation model. Rejects delta outside [0,1).
CorrelationModel build_correlation(int dim, double delta);

} // namespace mimosel
