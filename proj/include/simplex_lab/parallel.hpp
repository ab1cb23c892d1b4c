#pragma once

#include <cstddef>
#include <functional>

namespace simplex_lab {

/// Worker count: hardware concurrency, capped by SIMPLEX_LAB_THREADS.
unsigned worker_count();

/// Runs body(i) for i in [0, count). Bodies must only write to slots they
/// own; the first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace simplex_lab
