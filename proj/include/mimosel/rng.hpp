#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

namespace mimosel {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Derive an independent seed for a named sub-activity (e.g. SUS tuning)
/// so its draws never alias the main trial streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed ^ mix64(tag + 0x9E3779B97F4A7C15ull));
}

/// One independent random stream. Monte Carlo code creates a stream per
/// trial index so that results do not depend on execution order: the state
/// of a stream is a pure function of (seed, index).
class RngStream {
public:
    explicit RngStream(std::uint64_t state) : engine_(state) {}

    static RngStream for_trial(std::uint64_t seed, std::uint64_t index) {
        return RngStream(mix64(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform_pos() { return 1.0 - uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0ull - n) % n;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % n;
        }
    }

    /// Standard circularly-symmetric complex Gaussian CN(0,1):
    /// real and imaginary parts each zero-mean with variance 1/2.
    std::complex<double> complex_gaussian() {
        const double mag = std::sqrt(-std::log(uniform_pos()));
        const double phase = 2.0 * M_PI * uniform();
        return {mag * std::cos(phase), mag * std::sin(phase)};
    }

    Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXcd m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
        return m;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace mimosel
