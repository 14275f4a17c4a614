#pragma once

namespace mimosel {

/// Distribution of a BS-user distance: either the parent annulus law of a
/// single uniformly placed user, or the k-th order statistic (k-th nearest)
/// out of the full candidate set.
struct DistanceLaw {
    double r_min = 0.0;
    double r_max = 0.0;
    int candidates = 0;  ///< N
    int order = 0;       ///< 0 = unordered parent law, else k in [1, N]

    static DistanceLaw unordered(double r_min, double r_max, int candidates);
    static DistanceLaw order_statistic(double r_min, double r_max, int candidates, int k);

    double pdf(double r) const;
};

/// E[d^alpha] of the parent law, closed form:
/// 2 (r_max^{a+2} - r_min^{a+2}) / ((a+2)(r_max^2 - r_min^2)).
double moment_unordered(const DistanceLaw& law, double alpha);

/// E[d_(k)^alpha] via the hypergeometric identity
/// r_min^alpha 2F1(k, -alpha/2; N+1; 1 - r_max^2/r_min^2).
double moment_order_stat(const DistanceLaw& law, double alpha);

/// Same moment by adaptive quadrature of r^alpha against the order-statistic
/// density; kept as the in-repo verification route for the identity above.
double moment_order_stat_quadrature(const DistanceLaw& law, double alpha);

} // namespace mimosel
