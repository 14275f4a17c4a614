#include "mimosel/placement.hpp"

#include <cmath>

namespace mimosel {

double radius_pdf(double r, double r_min, double r_max) {
    if (r < r_min || r > r_max) return 0.0;
    return 2.0 * r / (r_max * r_max - r_min * r_min);
}

double radius_cdf(double r, double r_min, double r_max) {
    if (r <= r_min) return 0.0;
    if (r >= r_max) return 1.0;
    return (r * r - r_min * r_min) / (r_max * r_max - r_min * r_min);
}

double radius_from_uniform(double u, double r_min, double r_max) {
    return std::sqrt(r_min * r_min + u * (r_max * r_max - r_min * r_min));
}

UserPlacement sample_placement(const SystemConfig& cfg, RngStream& rng) {
    const int n = cfg.num_candidates;
    UserPlacement placement;
    placement.radii.resize(n);
    placement.angles.resize(n);
    for (int i = 0; i < n; ++i) {
        placement.radii[i] = radius_from_uniform(rng.uniform(), cfg.r_min, cfg.r_max);
        placement.angles[i] = 2.0 * M_PI * rng.uniform();
    }
    return placement;
}

} // namespace mimosel
