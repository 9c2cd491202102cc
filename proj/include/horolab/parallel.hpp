#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace horolab {

// Index-parallel loop with slot-indexed outputs: results are identical for
// any thread count because each index owns its output slot.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int k = std::min(threads, n);
  pool.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace horolab
