#include "mimosel/scheme.hpp"

#include "mimosel/errors.hpp"

namespace mimosel {

std::string to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::rus: return "rus";
        case Scheme::kstar_rus: return "kstar-rus";
        case Scheme::lus: return "lus";
        case Scheme::kstar_lus: return "kstar-lus";
        case Scheme::sus: return "sus";
    }
    return "unknown";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "rus") return Scheme::rus;
    if (name == "kstar-rus") return Scheme::kstar_rus;
    if (name == "lus") return Scheme::lus;
    if (name == "kstar-lus") return Scheme::kstar_lus;
    if (name == "sus") return Scheme::sus;
    throw ConfigError("unknown scheme '" + name +
                      "' (expected rus, kstar-rus, lus, kstar-lus or sus)");
}

} // namespace mimosel
