#pragma once

#include <cstdint>

namespace mtf {

/// Selects between the OpenMP kernel and the serial reference path.
/// Both paths return identical results; the serial one is kept as the
/// oracle for the parallel one.
enum class Execution { serial, parallel };

/// Worker count used by parallel kernels. Reads MTF_WORKERS once; falls
/// back to the OpenMP default when unset or invalid.
int worker_count();

/// Overrides the worker count for the rest of the process (values < 1
/// restore the default).
void set_worker_count(int workers);

/// Deterministic per-trial seed: the same (seed, index) pair always yields
/// the same stream regardless of which worker runs the trial.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace mtf
