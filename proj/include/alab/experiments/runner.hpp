#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace alab {

/// Worker count from ALAB_WORKERS, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* s = std::getenv("ALAB_WORKERS")) {
    try {
      const int w = std::stoi(s);
      if (w >= 1) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, count) on a pool of workers and returns the
/// results in index order. Each trial derives its own randomness from i, so
/// the output does not depend on scheduling. The first exception is
/// rethrown after all workers stop.
template <class Fn>
auto run_trials(std::size_t count, Fn&& fn, unsigned workers = worker_count()) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(count);
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (!failed) {
      const std::size_t i = next++;
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace alab
