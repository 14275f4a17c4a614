#pragma once

#include <cmath>

namespace mimosel {

/// dBm -> linear milliwatts.
inline double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }

/// Linear milliwatts -> dBm.
inline double linear_to_dbm(double mw) { return 10.0 * std::log10(mw); }

} // namespace mimosel
