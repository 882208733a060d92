#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ehlcp {

/// Worker cap: EHLCP_THREADS when set (minimum 1), else hardware concurrency.
int max_threads();

/// Runs body(i) for i in [0, count). Work is split into contiguous static
/// chunks, so writes indexed by i land deterministically regardless of the
/// thread count. The first exception thrown by any worker is rethrown.
template <typename F>
void parallel_for(std::int64_t count, F&& body) {
  if (count <= 0) return;
  const int threads = int(std::min<std::int64_t>(max_threads(), count));
  if (threads <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
  const std::int64_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::int64_t begin = t * chunk;
    const std::int64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        for (std::int64_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        errors[size_t(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ehlcp
