#ifndef HEVFLEX_PARALLEL_HPP
#define HEVFLEX_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hevflex {

// Runs fn(begin, end) over [0, n) split into fixed-size chunks. Chunk
// boundaries depend only on n and grain, so per-chunk results are stable
// regardless of thread count; chunks must write to disjoint locations.
inline void parallel_for_chunks(std::size_t n, std::size_t grain,
                                const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (grain == 0) grain = 1;
  const std::size_t n_chunks = (n + grain - 1) / grain;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 2;
  const std::size_t n_threads = std::min<std::size_t>(hw, n_chunks);
  if (n_threads <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c)
      fn(c * grain, std::min(n, (c + 1) * grain));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      fn(c * grain, std::min(n, (c + 1) * grain));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_threads - 1);
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace hevflex

#endif
