#include "mimosel/distance_law.hpp"

#include <cmath>

#include "mimosel/errors.hpp"
#include "mimosel/hyp2f1.hpp"
#include "mimosel/placement.hpp"
#include "mimosel/quadrature.hpp"

namespace mimosel {

namespace {

void check_law(const DistanceLaw& law) {
    if (!(law.r_max > law.r_min && law.r_min > 0.0))
        throw ConfigError("distance law requires 0 < r_min < r_max");
    if (law.candidates < 1) throw ConfigError("distance law requires candidates >= 1");
    if (law.order < 0 || law.order > law.candidates)
        throw ConfigError("order statistic index must lie in [1, N]");
}

double log_beta(double x, double y) {
    return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

} // namespace

DistanceLaw DistanceLaw::unordered(double r_min, double r_max, int candidates) {
    DistanceLaw law{r_min, r_max, candidates, 0};
    check_law(law);
    return law;
}

DistanceLaw DistanceLaw::order_statistic(double r_min, double r_max, int candidates, int k) {
    if (k < 1) throw ConfigError("order statistic index must be >= 1");
    DistanceLaw law{r_min, r_max, candidates, k};
    check_law(law);
    return law;
}

double DistanceLaw::pdf(double r) const {
    if (order == 0) return radius_pdf(r, r_min, r_max);
    if (r < r_min || r > r_max) return 0.0;

    // Beta(k, N-k+1) reweighting of the parent law, evaluated in the log
    // domain: factorials at N = 64 and powers like (r_max^2 - r^2)^{N-k}
    // overflow or underflow naively.
    const int n = candidates;
    const int k = order;
    const double span = r_max * r_max - r_min * r_min;
    const double upper = r_max * r_max - r * r;  // >= 0
    const double lower = r * r - r_min * r_min;  // >= 0
    if ((n - k > 0 && upper == 0.0) || (k - 1 > 0 && lower == 0.0)) return 0.0;

    double lf = std::log(2.0 * r) - log_beta(k, n - k + 1) - n * std::log(span);
    if (n - k > 0) lf += (n - k) * std::log(upper);
    if (k - 1 > 0) lf += (k - 1) * std::log(lower);
    return std::exp(lf);
}

double moment_unordered(const DistanceLaw& law, double alpha) {
    check_law(law);
    const double a2 = alpha + 2.0;
    const double num = 2.0 * (std::pow(law.r_max, a2) - std::pow(law.r_min, a2));
    const double den = a2 * (law.r_max * law.r_max - law.r_min * law.r_min);
    return num / den;
}

double moment_order_stat(const DistanceLaw& law, double alpha) {
    check_law(law);
    if (law.order == 0) throw ConfigError("moment_order_stat requires an order-statistic law");
    const double ratio = law.r_max / law.r_min;
    return std::pow(law.r_min, alpha) *
           hyp2f1(law.order, -0.5 * alpha, law.candidates + 1, 1.0 - ratio * ratio);
}

double moment_order_stat_quadrature(const DistanceLaw& law, double alpha) {
    check_law(law);
    if (law.order == 0) throw ConfigError("moment_order_stat requires an order-statistic law");
    return integrate([&](double r) { return std::pow(r, alpha) * law.pdf(r); }, law.r_min,
                     law.r_max, 0.0, 1e-12, 32);
}

} // namespace mimosel
