#pragma once

// Deterministic fork-join loop: the index range is split into
// contiguous blocks, one per worker, so results land in caller-owned
// slots and the merge order never depends on scheduling.

#include <algorithm>
#include <thread>
#include <vector>

namespace hvsim {

// Invokes fn(i) for i in [0, count); with threads <= 1 (or a tiny
// range) this is a plain loop on the calling thread.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (count <= 0) return;
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int block = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = w * block;
    const int hi = std::min(count, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hvsim
