#include "hypercf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hypercf {

std::size_t worker_count() {
    if (const char* env = std::getenv("HYPERCF_THREADS")) {
        try {
            long n = std::stol(env);
            if (n > 0) return static_cast<std::size_t>(n);
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace hypercf
