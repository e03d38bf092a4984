#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quadlab {

/// requested > 0 wins; otherwise QL_THREADS if set to a positive integer;
/// otherwise the hardware concurrency (at least 1).
std::size_t resolve_threads(std::size_t requested = 0);

/// Splits [0, count) into `chunks` contiguous ranges, evaluates
/// fn(begin, end) for each on up to `threads` workers, and returns the
/// results in range order. Results never depend on the worker count.
template <class Fn>
auto map_ranges(std::uint64_t count, std::size_t chunks, std::size_t threads, Fn&& fn) {
  using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}));
  chunks = static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(chunks, count)));
  std::vector<Result> results(chunks);
  auto bounds = [&](std::size_t c) {
    return std::pair{count * c / chunks, count * (c + 1) / chunks};
  };

  threads = std::max<std::size_t>(1, std::min(threads, chunks));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      auto [b, e] = bounds(c);
      results[c] = fn(b, e);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) {
          try {
            auto [b, e] = bounds(c);
            results[c] = fn(b, e);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace quadlab
