#ifndef VURKIT_PARALLEL_HPP
#define VURKIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace vurkit {

/// Worker count from VURKIT_THREADS (0 or unset = hardware concurrency).
inline unsigned configured_threads() {
  unsigned n = 0;
  if (const char* env = std::getenv("VURKIT_THREADS")) {
    try {
      n = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      n = 0;
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

/// Runs body(i) for i in [0, count) on up to `threads` workers. Callers write results
/// into per-index slots, so output never depends on scheduling.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

} // namespace vurkit

#endif // VURKIT_PARALLEL_HPP
