#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hmf {

// Runs fn(i) for i in [0, n) on up to `degree` threads.  Work is handed out
// in fixed contiguous blocks, so each index is always computed by exactly
// one task and results land in caller-owned slots; the caller reduces in
// index order, which keeps outputs independent of the thread count.
inline void parallel_for(std::size_t n, int degree,
                         const std::function<void(std::size_t)>& fn) {
  if (degree <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nthreads = std::min<std::size_t>(
      {static_cast<std::size_t>(degree), n, hw ? hw : 1});
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 16;
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t lo = next.fetch_add(kChunk);
        if (lo >= n) return;
        std::size_t hi = std::min(n, lo + kChunk);
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hmf
