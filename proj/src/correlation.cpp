#include "mimosel/correlation.hpp"

#include <cmath>
#include <cstdlib>

#include "mimosel/errors.hpp"

namespace mimosel {

CorrelationModel build_correlation(int dim, double delta) {
    if (dim < 1) throw ConfigError("correlation dimension must be positive");
    if (!(delta >= 0.0 && delta < 1.0))
        throw ConfigError("correlation coefficient must lie in [0,1)");

    CorrelationModel model;
    model.delta = delta;
    model.dim = dim;

    if (delta == 0.0) {
        model.matrix = Eigen::MatrixXd::Identity(dim, dim);
        model.eigenvalues = Eigen::VectorXd::Ones(dim);
        model.sqrt_matrix = model.matrix;
        return model;
    }

    model.matrix.resize(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            model.matrix(i, j) = std::pow(delta, std::abs(i - j));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(model.matrix);
    model.eigenvalues = solver.eigenvalues();
    model.sqrt_matrix = solver.eigenvectors() *
                        model.eigenvalues.cwiseSqrt().asDiagonal() *
                        solver.eigenvectors().transpose();
    return model;
}

} // namespace mimosel
