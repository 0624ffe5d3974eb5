#pragma once

#include <cstddef>
#include <functional>

namespace walks {

/// Worker cap: WALKS_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs task(i) for i in [0, count) on up to worker_count() threads.
/// Tasks must write only to their own output slot; exceptions are rethrown
/// on the calling thread (lowest index first).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace walks
