#include "mimosel/hyp2f1.hpp"

#include <cmath>

#include "mimosel/errors.hpp"

namespace mimosel {

namespace {

constexpr long kMaxTerms = 1000000;

double gauss_series(double a, double b, double c, double w) {
    double term = 1.0;
    double sum = 1.0;
    for (long n = 0; n < kMaxTerms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * w;
        sum += term;
        if (std::abs(term) <= 1e-15 * std::abs(sum)) return sum;
    }
    throw NoConvergenceError("2F1 series did not converge");
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

} // namespace

double hyp2f1(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c))
        throw ConfigError("2F1 undefined for non-positive integer c");
    if (z == 0.0) return 1.0;
    if (z < 0.0) return std::pow(1.0 - z, -b) * gauss_series(c - a, b, c, z / (z - 1.0));
    if (z < 1.0) return gauss_series(a, b, c, z);
    throw ConfigError("2F1 argument must satisfy z < 1");
}

} // namespace mimosel
