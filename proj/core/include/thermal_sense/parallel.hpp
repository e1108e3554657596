#pragma once

#include <cstddef>
#include <functional>

namespace thermal_sense {

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index runs
// exactly once; the first exception thrown is rethrown after all workers
// finish.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

// THERMAL_SENSE_THREADS if set to a positive integer, else 1.
std::size_t thread_limit_from_env();

}  // namespace thermal_sense
