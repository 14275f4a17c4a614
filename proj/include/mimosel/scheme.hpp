#pragma once

#include <string>

namespace mimosel {

/// User selection schemes. rus/lus take an explicit user count K
/// (conventional RUS serves K = M); the kstar variants resolve K from the
/// offline rate-approximation search; sus decides its own count per slot.
enum class Scheme { rus, kstar_rus, lus, kstar_lus, sus };

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

inline bool is_rus_family(Scheme s) { return s == Scheme::rus || s == Scheme::kstar_rus; }
inline bool is_lus_family(Scheme s) { return s == Scheme::lus || s == Scheme::kstar_lus; }
inline bool uses_kstar(Scheme s) { return s == Scheme::kstar_rus || s == Scheme::kstar_lus; }

} // namespace mimosel
