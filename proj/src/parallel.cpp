#include "mtf/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mtf {

namespace {

int default_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int read_env_workers() {
    if (const char* env = std::getenv("MTF_WORKERS")) {
        try {
            int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (const std::exception&) {
        }
    }
    return default_workers();
}

int& workers_slot() {
    static int workers = read_env_workers();
    return workers;
}

}  // namespace

int worker_count() { return workers_slot(); }

void set_worker_count(int workers) { workers_slot() = workers >= 1 ? workers : read_env_workers(); }

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over the combined key
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace mtf
