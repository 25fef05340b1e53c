#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace plw {

// Worker budget: PLW_JOBS when set (>=1), otherwise available parallelism.
inline int worker_count() {
  if (const char* env = std::getenv("PLW_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n) on the worker pool. Callers keep determinism by
// writing results into index i of a pre-sized container.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  const int jobs = std::min(worker_count(), n);
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace plw
