#ifndef HIGGSMOT_DETAIL_PARALLEL_HPP
#define HIGGSMOT_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace higgsmot::detail {

inline std::size_t worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// out[i] = fn(i) for i < n, split into contiguous chunks over std::async
// workers. Runs inline when a single worker is available.
template <typename Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Value = decltype(fn(std::size_t{}));
  std::vector<Value> out(n);
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> tasks;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t end = std::min(n, begin + chunk);
    tasks.push_back(std::async(std::launch::async, [&out, &fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

}  // namespace higgsmot::detail

#endif  // HIGGSMOT_DETAIL_PARALLEL_HPP
