#include "quermass/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quermass {

void apply_thread_cap_from_env() {
#ifdef _OPENMP
    if (const char* env = std::getenv("QUERMASS_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) omp_set_num_threads(n);
        } catch (...) {
            // ignore malformed values; the OpenMP default stands
        }
    }
#endif
}

int active_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace quermass
