#ifndef YBE_PARALLEL_HPP
#define YBE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ybe {

  // Runs f(i) for every i in [0, count) on up to `threads` workers. Work
  // items must write only to their own output slot; the first exception
  // thrown by any item is rethrown on the calling thread.
  template <typename Func>
  void parallel_for(std::size_t count, std::size_t threads, Func&& f) {
    if (threads <= 1 || count <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        f(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mtx;
    auto                     worker = [&] {
      while (true) {
        auto i = next.fetch_add(1);
        if (i >= count) {
          return;
        }
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mtx);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < std::min(threads, count); ++t) {
        pool.emplace_back(worker);
      }
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace ybe

#endif  // YBE_PARALLEL_HPP
