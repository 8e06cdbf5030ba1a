#pragma once

// Fixed-size worker fan-out with results collected in worker order.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace betawalk {

/// BETAWALK_THREADS if set to a positive integer, else the logical CPU count.
inline unsigned default_threads() {
  if (const char* env = std::getenv("BETAWALK_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(worker) for worker in [0, workers) on separate threads and returns
/// the results indexed by worker. The first exception thrown is rethrown.
template <typename Fn>
auto run_workers(unsigned workers, Fn&& fn) -> std::vector<decltype(fn(0u))> {
  using Result = decltype(fn(0u));
  workers = std::max(1u, workers);
  std::vector<Result> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  if (workers == 1) {
    results[0] = fn(0u);
    return results;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          results[w] = fn(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

/// Splits [0, count) into `chunks` contiguous windows; window i is [first, first + size).
struct ChunkWindow {
  std::uint64_t first;
  std::uint64_t size;
};

inline ChunkWindow chunk_window(std::uint64_t count, unsigned chunks, unsigned i) {
  const std::uint64_t base = count / chunks;
  const std::uint64_t extra = count % chunks;
  const std::uint64_t first = i * base + std::min<std::uint64_t>(i, extra);
  return {first, base + (i < extra ? 1 : 0)};
}

}  // namespace betawalk
