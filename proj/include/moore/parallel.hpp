#pragma once

// Chunked parallel drivers over an index range [0, total).
//
// Chunks are handed out in increasing order from a shared counter. Results
// never depend on the number of workers: first-hit search returns the lowest
// hit index, reductions are sums.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace moore {

struct ParallelOptions {
  unsigned jobs = 0;         // 0 = hardware concurrency
  std::uint64_t chunk = 0;   // 0 = driver default
};

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace detail {

template <class Body>
void run_workers(unsigned jobs, Body&& body) {
  std::exception_ptr error;
  std::mutex error_mu;
  auto guarded = [&] {
    try {
      body();
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };
  if (jobs <= 1) {
    guarded();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(guarded);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Lowest index in [0, total) at which some worker reports a hit.
/// make_worker() is called once per thread and must return a callable
/// (begin, end) -> std::optional<std::uint64_t> giving the first hit in
/// [begin, end), if any.
template <class MakeWorker>
std::optional<std::uint64_t> parallel_first_hit(std::uint64_t total, const ParallelOptions& opt,
                                                std::uint64_t default_chunk,
                                                MakeWorker&& make_worker) {
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk ? opt.chunk : default_chunk);
  const std::uint64_t n_chunks = (total + chunk - 1) / chunk;
  const unsigned jobs =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(opt.jobs), std::max<std::uint64_t>(n_chunks, 1)));
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{total};
  detail::run_workers(jobs, [&] {
    auto worker = make_worker();
    while (true) {
      const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) break;
      const std::uint64_t begin = c * chunk;
      if (begin >= best.load(std::memory_order_relaxed)) break;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (const auto hit = worker(begin, end)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (*hit < cur && !best.compare_exchange_weak(cur, *hit, std::memory_order_relaxed)) {
        }
      }
    }
  });
  const std::uint64_t b = best.load();
  if (b < total) return b;
  return std::nullopt;
}

/// Sum over chunks. make_worker() returns a callable (begin, end) -> T.
template <class T, class MakeWorker>
T parallel_sum(std::uint64_t total, const ParallelOptions& opt, std::uint64_t default_chunk,
               MakeWorker&& make_worker) {
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk ? opt.chunk : default_chunk);
  const std::uint64_t n_chunks = (total + chunk - 1) / chunk;
  const unsigned jobs =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(opt.jobs), std::max<std::uint64_t>(n_chunks, 1)));
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  T acc{};
  detail::run_workers(jobs, [&] {
    auto worker = make_worker();
    T local{};
    while (true) {
      const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) break;
      const std::uint64_t begin = c * chunk;
      local += worker(begin, std::min(total, begin + chunk));
    }
    std::lock_guard<std::mutex> lock(mu);
    acc += local;
  });
  return acc;
}

}  // namespace moore
