#pragma once

// Minimal deterministic parallel sweep: the index range is split into
// contiguous chunks, workers fill per-chunk results, and the chunks are
// concatenated in index order, so the output never depends on thread timing.

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace qtorus {

/// Resolve a worker count: the TORUS_JOBS environment variable overrides an
/// explicit value, which overrides the hardware concurrency (at least 1).
int resolveJobs(int requested);

/// Runs fn(begin, end) over a partition of [0, total) using `jobs` workers
/// (resolved via resolveJobs) and returns per-chunk results concatenated in
/// range order.
template <typename Result>
std::vector<Result> parallelChunks(
    std::uint64_t total, int jobs,
    const std::function<Result(std::uint64_t, std::uint64_t)>& fn) {
  int workers = resolveJobs(jobs);
  if (total == 0) return {};
  if (static_cast<std::uint64_t>(workers) > total) {
    workers = static_cast<int>(total);
  }
  std::vector<Result> results(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  std::uint64_t chunk = total / workers;
  std::uint64_t rem = total % workers;
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t len = chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
    std::uint64_t end = begin + len;
    threads.emplace_back([&results, &fn, w, begin, end]() {
      results[static_cast<std::size_t>(w)] = fn(begin, end);
    });
    begin = end;
  }
  for (std::thread& t : threads) t.join();
  return results;
}

}  // namespace qtorus
