#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ais {

/// Calls fn(i) for i in [0, count) on at most `bound` threads. Every index
/// runs even if some throw; the exception of the lowest failing index is
/// rethrown afterwards.
template <typename Fn>
void run_bounded(std::size_t count, std::size_t bound, Fn&& fn) {
  if (count == 0) return;
  bound = std::clamp<std::size_t>(bound, 1, count);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = count;
  std::exception_ptr error;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };

  if (bound == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(bound);
    for (std::size_t t = 0; t < bound; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace ais
