#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace abc {

/// Runs body(i) for i in [0, count) on `workers` threads in contiguous
/// blocks. Each index is visited exactly once; the first exception thrown by a
/// worker is rethrown on the caller.
template <typename Body>
void parallel_for(int workers, std::size_t count, Body&& body) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t used = std::min(threads, count);
  const std::size_t block = (count + used - 1) / used;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(used);
    for (std::size_t t = 0; t < used; ++t) {
      pool.emplace_back([&, t] {
        try {
          const std::size_t lo = t * block;
          const std::size_t hi = std::min(count, lo + block);
          for (std::size_t i = lo; i < hi; ++i) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace abc
