#pragma once

namespace mimosel {

/// Gauss hypergeometric function 2F1(a, b; c; z) for real parameters and
/// z < 1. Arguments z in [0, 1) are summed directly; z < 0 goes through the
/// Pfaff transformation 2F1(a,b;c;z) = (1-z)^{-b} 2F1(c-a, b; c; z/(z-1)),
/// which maps the large negative arguments of the distance-moment identity
/// into (0, 1). The series is summed by term-ratio recursion until the
/// running term falls below 1e-15 of the partial sum.
///
/// Throws ConfigError when c is a non-positive integer or z >= 1, and
/// NoConvergenceError if 1e6 terms do not suffice.
double hyp2f1(double a, double b, double c, double z);

} // namespace mimosel
