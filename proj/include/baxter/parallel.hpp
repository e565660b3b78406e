#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace baxter {

inline int& worker_count_setting() {
  static int n = 0;  // 0 = hardware concurrency
  return n;
}

inline void set_worker_count(int n) { worker_count_setting() = n; }

inline int effective_workers() {
  int n = worker_count_setting();
  if (n > 0) return n;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for every i in [0, count). Callers must make fn(i) write only
// into slot i of a pre-sized result, so output never depends on the worker
// count. The first exception thrown by any worker is rethrown here.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  std::size_t workers = static_cast<std::size_t>(effective_workers());
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto body = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace baxter
