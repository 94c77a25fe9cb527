#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace latmed {

/// Worker count from LATMED_THREADS, else the hardware concurrency (at least 1).
std::size_t default_worker_count();

/// Runs body(i) for every i in [0, count) on up to `workers` threads. The first
/// exception thrown by a body is rethrown after all threads have joined.
template <typename F>
void parallel_for(std::size_t count, std::size_t workers, F&& body) {
  if (workers == 0) workers = default_worker_count();
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace latmed
