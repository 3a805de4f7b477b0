#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace casselman {

// Worker count from CASSELMAN_WORKERS, else hardware concurrency (at least 1).
int worker_count();

// Runs body(worker, i) for i in [0, n) on up to `workers` threads. Items are
// claimed dynamically; each worker index owns whatever per-worker state the
// caller keys on it. The first exception thrown by any body is rethrown.
template <class Body>
void parallel_for(std::size_t n, int workers, Body&& body) {
  if (workers < 1) workers = 1;
  if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n == 0 ? 1 : n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(0, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(w, i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace casselman
