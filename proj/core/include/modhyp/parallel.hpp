#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace modhyp {

/// Worker count used when a caller passes 0.
inline unsigned default_threads() {
  if (const char* env = std::getenv("MODHYP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [begin, end) into `chunks` contiguous pieces and runs fn(chunk_index, lo, hi)
/// on up to `threads` workers. Chunk boundaries depend only on (begin, end, chunks),
/// so per-chunk results merged by index are independent of scheduling.
/// The first exception thrown by any chunk is rethrown after all workers join.
template <typename Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::size_t chunks, unsigned threads, Fn&& fn) {
  if (end <= begin) return;
  chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(chunks, end - begin));
  if (threads == 0) threads = default_threads();
  const std::uint64_t span = end - begin;
  auto bound = [&](std::size_t i) { return begin + span * i / chunks; };

  if (threads <= 1 || chunks == 1) {
    for (std::size_t i = 0; i < chunks; ++i) fn(i, bound(i), bound(i + 1));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= chunks) return;
      try {
        fn(i, bound(i), bound(i + 1));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned n = std::min<std::size_t>(threads, chunks);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace modhyp
