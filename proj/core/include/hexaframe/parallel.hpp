#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hexaframe {

/// HEXAFRAME_WORKERS if set to a positive integer, else the hardware
/// concurrency (at least 1).
inline int default_workers() {
  if (const char* env = std::getenv("HEXAFRAME_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for every i in [0, tasks) on up to `workers` threads. Tasks
/// are handed out in index order; callers merge per-task results by index to
/// stay deterministic. The first exception thrown by a task is rethrown.
template <class Fn>
void parallel_for(int tasks, int workers, Fn&& fn) {
  workers = std::clamp(workers, 1, std::max(tasks, 1));
  if (workers == 1) {
    for (int i = 0; i < tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (int i = next++; i < tasks; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = tasks;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hexaframe
