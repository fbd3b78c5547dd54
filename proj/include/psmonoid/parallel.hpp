#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace psmonoid {

inline unsigned resolve_parallelism(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n) across `threads` workers.  fn must be safe to
/// call concurrently for distinct indices.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& fn) {
  threads = resolve_parallelism(threads);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
}

}  // namespace psmonoid
