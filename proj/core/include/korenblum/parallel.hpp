#pragma once

#include <cstddef>
#include <functional>

namespace korenblum {

// Threads from KORENBLUM_THREADS (default: hardware concurrency, at least 1).
unsigned worker_count();

// Calls body(i) for i in [0, n) on up to `threads` workers. Each index is
// handled exactly once; callers write results by index, so output does not
// depend on the thread count. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads = worker_count());

}  // namespace korenblum
