#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fgl {

/// Worker count: FGL_THREADS if set to a positive integer, else the number of
/// hardware threads (at least 1).
unsigned thread_count();

/// Runs body(i, worker) for every i in [0, n). Indices are handed out in
/// blocks from a shared counter; `worker` is in [0, thread_count()) and lets
/// callers keep per-worker accumulators. The first exception thrown by any
/// worker is rethrown after all workers join.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t block = 16) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), (n + block - 1) / block));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](unsigned worker) {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(block);
        if (begin >= n) break;
        const std::size_t end = std::min(n, begin + block);
        for (std::size_t i = begin; i < end; ++i) body(i, worker);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(n);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, w);
  run(0);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fgl
