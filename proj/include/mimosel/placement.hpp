#pragma once

#include <Eigen/Dense>

#include "mimosel/rng.hpp"
#include "mimosel/system_config.hpp"

namespace mimosel {

/// Polar positions of the N candidate users, BS at the origin.
struct UserPlacement {
    Eigen::VectorXd radii;   ///< meters, within [r_min, r_max]
    Eigen::VectorXd angles;  ///< radians, [0, 2*pi)

    Eigen::Index size() const { return radii.size(); }
};

/// Density of the BS-user distance for a user placed uniformly over the
/// annulus: f_R(r) = 2r / (r_max^2 - r_min^2) on [r_min, r_max].
double radius_pdf(double r, double r_min, double r_max);

/// Corresponding CDF: (r^2 - r_min^2) / (r_max^2 - r_min^2).
double radius_cdf(double r, double r_min, double r_max);

/// Inverse-CDF transform of a uniform variate u in [0,1).
double radius_from_uniform(double u, double r_min, double r_max);

/// Draws num_candidates user positions, radii by inverse CDF and angles
/// uniform on [0, 2*pi).
UserPlacement sample_placement(const SystemConfig& cfg, RngStream& rng);

} // namespace mimosel
