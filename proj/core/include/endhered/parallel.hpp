#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace endhered {

/// Worker count: hardware concurrency, capped by ENDHERED_THREADS when set.
unsigned worker_count();

/// Runs fn(i) for i in [0, count) on up to worker_count() threads. Callers
/// write results into per-index slots so merge order stays deterministic.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = cursor++; i < count; i = cursor++) fn(i);
    });
  }
}

}  // namespace endhered
