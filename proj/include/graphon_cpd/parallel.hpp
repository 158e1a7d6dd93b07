#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace graphon_cpd {

/// Environment variable capping worker threads (0 or unset = no cap).
inline constexpr const char* threads_env_var = "GRAPHON_CPD_THREADS";

/// Execution policy. `threads == 0` means automatic.
struct Exec {
  unsigned threads = 0;
};

inline unsigned env_thread_cap() {
  const char* raw = std::getenv(threads_env_var);
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw) return 0;
  return static_cast<unsigned>(std::min<unsigned long>(v, 1024));
}

/// Effective worker count for `exec`, bounded by the work size.
inline unsigned resolve_threads(Exec exec, std::size_t work_items) {
  unsigned n = exec.threads;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
  }
  if (const unsigned cap = env_thread_cap(); cap > 0) n = std::min(n, cap);
  if (work_items < n) n = static_cast<unsigned>(std::max<std::size_t>(1, work_items));
  return n;
}

/// Calls `fn(begin, end)` on contiguous chunks of [0, count). Chunk
/// boundaries depend on the worker count, so callers must make per-index
/// results independent of chunking. The first exception is rethrown.
template <class Fn>
void parallel_chunks(std::size_t count, Exec exec, Fn&& fn) {
  if (count == 0) return;
  const unsigned workers = resolve_threads(exec, count);
  if (workers <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t base = count / workers;
  const std::size_t extra = count % workers;
  std::size_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t len = base + (w < extra ? 1 : 0);
    const std::size_t end = begin + len;
    pool.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
    begin = end;
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

/// Calls `fn(i)` for every i in [0, count).
template <class Fn>
void parallel_for(std::size_t count, Exec exec, Fn&& fn) {
  parallel_chunks(count, exec, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) fn(i);
  });
}

}  // namespace graphon_cpd
