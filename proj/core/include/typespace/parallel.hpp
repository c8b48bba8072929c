#pragma once

#include <cstddef>
#include <functional>

namespace typespace {

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// fn(begin, end, worker) on each. workers <= 1 runs inline. Exceptions from
/// workers are rethrown (the first one by worker index).
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t, std::size_t, int)>& fn);

/// Worker count for a --workers value: 0 means hardware concurrency.
int resolve_workers(int requested);

}  // namespace typespace
