#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ncv {

/// Worker count: NCV_THREADS if set to a positive integer, else the hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("NCV_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(begin, end, worker) on contiguous chunks of [0, n). Chunks are
/// fixed by n and the worker count; the first exception is rethrown.
template <class Body>
void parallel_for(long n, Body body, int workers = thread_count()) {
  workers = static_cast<int>(std::max(1L, std::min<long>(workers, n)));
  if (workers == 1) {
    body(0L, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  long chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    long b = w * chunk, e = std::min(n, b + chunk);
    pool.emplace_back([&, w, b, e] {
      try {
        if (b < e) body(b, e, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ncv
