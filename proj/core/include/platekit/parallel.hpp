#pragma once

#include <cstddef>
#include <functional>

namespace platekit {

/// Worker count: PLATEKIT_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Calls fn(i) for i in [0, n). Each index is visited exactly once; callers
/// write results into preallocated slots so output order does not depend on
/// scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace platekit
