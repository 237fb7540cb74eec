#ifndef HIGGSMOT_DETAIL_MEMO_HPP
#define HIGGSMOT_DETAIL_MEMO_HPP

#include <future>
#include <map>
#include <mutex>

namespace higgsmot::detail {

// Thread-safe memo table. Concurrent requests for the same key wait on a
// single computation; a throwing computation is cached as that exception.
template <typename Key, typename Value>
class MemoCache {
 public:
  template <typename Fn>
  Value get(const Key& key, Fn&& compute) {
    std::shared_future<Value> future;
    std::promise<Value> promise;
    bool owner = false;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it == table_.end()) {
        future = promise.get_future().share();
        table_.emplace(key, future);
        owner = true;
      } else {
        future = it->second;
      }
    }
    if (owner) {
      try {
        promise.set_value(compute());
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return future.get();
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    table_.clear();
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::shared_future<Value>> table_;
};

}  // namespace higgsmot::detail

#endif  // HIGGSMOT_DETAIL_MEMO_HPP
