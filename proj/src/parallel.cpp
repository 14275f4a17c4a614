#include "mimosel/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mimosel {

int default_thread_count() {
    if (const char* env = std::getenv("MIMOSEL_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int resolve_thread_count(int requested) {
    return requested >= 1 ? requested : default_thread_count();
}

} // namespace mimosel
