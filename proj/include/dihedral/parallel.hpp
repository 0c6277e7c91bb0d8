#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dihedral {

// Number of worker threads to use. Honors the DIHEDRAL_TREES_THREADS
// environment variable when set to a positive integer, otherwise falls back
// to the hardware concurrency (at least 1).
inline unsigned thread_budget() {
  if (const char* env = std::getenv("DIHEDRAL_TREES_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs body(i) for i in [begin, end) across the thread budget. Results must
// be written to per-index slots by the body; iteration order within a worker
// is ascending, so output is deterministic regardless of thread count. The
// first exception thrown by any body is rethrown on the calling thread.
template <typename Body>
void parallel_for(long begin, long end, Body&& body) {
  const long total = end - begin;
  if (total <= 0) return;
  const unsigned workers =
      std::min<unsigned>(thread_budget(), static_cast<unsigned>(total));
  if (workers <= 1) {
    for (long i = begin; i < end; ++i) body(i);
    return;
  }
  std::atomic<long> next(begin);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&]() {
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= end) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace dihedral
