#include "minnaert/parallel.hpp"

#include <cstdlib>
#include <string>

namespace minnaert {

unsigned worker_count_from_env() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("MINNAERT_THREADS");
    if (!env || !*env) return hw;
    try {
        const long v = std::stol(env);
        if (v < 1) return 1;
        return static_cast<unsigned>(v) < hw ? static_cast<unsigned>(v) : hw;
    } catch (...) {
        return hw;
    }
}

}  // namespace minnaert
