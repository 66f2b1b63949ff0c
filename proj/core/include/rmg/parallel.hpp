#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rmg {

inline int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

inline int resolve_workers(int workers) {
  return workers <= 0 ? default_workers() : workers;
}

/// Runs fn(shard) for every shard in [0, shards) on up to `workers` threads
/// and returns the results indexed by shard. Results are merged by the
/// caller in shard order, so output is independent of scheduling; the
/// first pending exception (by shard index) is rethrown.
template <typename R>
std::vector<R> run_shards(int shards, int workers, const std::function<R(int)>& fn) {
  workers = resolve_workers(workers);
  std::vector<R> results(shards);
  if (shards == 0) return results;
  if (workers <= 1 || shards == 1) {
    for (int s = 0; s < shards; ++s) results[s] = fn(s);
    return results;
  }
  std::vector<std::exception_ptr> errors(shards);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int s = next.fetch_add(1);
      if (s >= shards) return;
      try {
        results[s] = fn(s);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min(workers, shards);
  pool.reserve(count);
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace rmg
