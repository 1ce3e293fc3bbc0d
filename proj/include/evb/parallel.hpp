#pragma once

#include <thread>
#include <vector>

namespace evb {

/// Runs fn(begin, end) over a partition of [0, n) using `threads` workers.
/// Workers write to disjoint output ranges and perform no shared reductions,
/// so results are identical for any thread count.
template <typename Fn>
void parallel_for(long n, int threads, Fn&& fn) {
  if (n <= 0) return;
  if (threads < 2 || n < 2 * threads) {
    fn(0L, n);
    return;
  }
  const long chunk = (n + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    const long begin = t * chunk;
    const long end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace evb
