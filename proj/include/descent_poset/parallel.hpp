#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace descent_poset {

// Applies fn to every input on up to `width` worker threads. Results keep
// the input order. The first exception thrown by a worker is rethrown.
template <typename In, typename Fn>
auto ordered_map(const std::vector<In>& inputs, Fn fn, std::size_t width) {
  using Out = decltype(fn(inputs.front()));
  std::vector<Out> results(inputs.size());
  width = std::max<std::size_t>(1, std::min(width, inputs.size()));
  if (width == 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = fn(inputs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        results[i] = fn(inputs[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = inputs.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace descent_poset
