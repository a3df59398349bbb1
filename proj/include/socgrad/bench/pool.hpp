#pragma once

#include <cstddef>
#include <functional>

namespace socgrad::bench {

/// Number of workers a pool of `count` independent tasks would use: the
/// SOCGRAD_THREADS environment variable if set (must parse as a positive
/// integer), else the hardware concurrency, capped at count.
std::size_t worker_count(std::size_t count);

/// Run body(i) for every i in [0, count) across worker_count(count)
/// threads. Tasks must be independent; they are claimed from a shared
/// counter, so completion order is arbitrary but each index runs exactly
/// once. The first exception thrown by any task is rethrown on the calling
/// thread after all workers finish. With one worker everything runs inline.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body);

}  // namespace socgrad::bench
