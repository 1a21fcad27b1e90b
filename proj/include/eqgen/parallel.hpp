#ifndef EQGEN_PARALLEL_HPP
#define EQGEN_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace eqgen {

// Evaluates fn(0..count-1) on a small worker pool and hands the results to
// the caller in index order, so reductions are deterministic regardless of
// the worker count. Exact arithmetic makes the combined result bit-identical
// either way; this only spreads the work.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn,
                            unsigned workers) {
  std::vector<T> out(count);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      out[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = std::min<std::size_t>(workers, count);
  pool.reserve(spawn);
  for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace eqgen

#endif
