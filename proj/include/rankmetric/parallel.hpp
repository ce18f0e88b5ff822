#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rankmetric {

// RANKMETRIC_WORKERS if set, else hardware concurrency.
int default_workers();
void set_default_workers(int workers);

// Split [0, total) into contiguous chunks and call f(begin, end, worker) on
// each from its own thread. The first exception thrown is rethrown here.
template <class F>
void parallel_ranges(std::uint64_t total, int workers, F&& f) {
  if (workers <= 0) workers = default_workers();
  std::uint64_t w = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), std::max<std::uint64_t>(total, 1));
  if (w <= 1 || total < 4096) {
    f(std::uint64_t{0}, total, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr err;
  std::mutex mu;
  for (std::uint64_t t = 0; t < w; ++t) {
    std::uint64_t b = total * t / w, e = total * (t + 1) / w;
    threads.emplace_back([&, b, e, t] {
      try {
        f(b, e, static_cast<int>(t));
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (err) std::rethrow_exception(err);
}

// Run f(i) for i in [0, count) on up to `workers` threads, any order.
template <class F>
void parallel_tasks(std::size_t count, int workers, F&& f) {
  if (workers <= 0) workers = default_workers();
  std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  std::exception_ptr err;
  std::mutex mu;
  for (std::size_t t = 0; t < w; ++t) {
    threads.emplace_back([&] {
      try {
        for (std::size_t i; (i = next++) < count;) f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace rankmetric
