#include "nullkit/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nullkit {

namespace {

// Runs body(begin, end) on up to `jobs` contiguous chunks and rethrows the
// first exception from any worker.
void run_chunks(std::uint64_t total, unsigned jobs,
                const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, total));
  if (workers == 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex mu;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
    threads.emplace_back([&, w, lo, hi] {
      try {
        body(w, lo, hi);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::uint64_t parallel_count(std::uint64_t total, unsigned jobs, const std::function<bool(std::uint64_t)>& pred) {
  std::vector<std::uint64_t> partial(std::max(1u, jobs), 0);
  run_chunks(total, jobs, [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t c = 0;
    for (std::uint64_t i = lo; i < hi; ++i)
      if (pred(i)) ++c;
    partial[w] = c;
  });
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

std::optional<std::uint64_t> parallel_find_first(std::uint64_t total, unsigned jobs,
                                                 const std::function<bool(std::uint64_t)>& pred) {
  std::atomic<std::uint64_t> best{total};
  run_chunks(total, jobs, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi && i < best.load(); ++i)
      if (pred(i)) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
  });
  if (best.load() == total) return std::nullopt;
  return best.load();
}

}  // namespace nullkit
