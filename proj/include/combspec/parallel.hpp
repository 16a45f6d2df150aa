#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "combspec/config.hpp"

namespace combspec {

unsigned resolve_workers(unsigned requested);

namespace detail {

inline std::uint64_t chunk_size(std::uint64_t total, unsigned workers) {
  const std::uint64_t target = total / (static_cast<std::uint64_t>(workers) * 16U) + 1U;
  return std::clamp<std::uint64_t>(target, 64, 1U << 16U);
}

// Runs body(worker_index) on `workers` threads (inline when workers == 1) and
// rethrows the first exception raised by any of them.
template <class Body>
void run_workers(unsigned workers, Body&& body) {
  if (workers <= 1) {
    body(0U);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Smallest index in [0, total) satisfying pred, independent of worker count.
/// Chunks past the best hit found so far are skipped.
template <class Pred>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t total, const Limits& limits,
                                                 Pred&& pred) {
  const unsigned workers = resolve_workers(limits.workers);
  const std::uint64_t chunk = detail::chunk_size(total, workers);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{total};
  std::atomic<bool> failed{false};
  detail::run_workers(workers, [&](unsigned) {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(chunk);
        if (begin >= total || begin >= best.load() || failed.load()) return;
        limits.check_deadline();
        const std::uint64_t end = std::min(total, begin + chunk);
        for (std::uint64_t i = begin; i < end && i < best.load(); ++i) {
          if (pred(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      failed = true;
      throw;
    }
  });
  const std::uint64_t b = best.load();
  if (b >= total) return std::nullopt;
  return b;
}

/// Number of indices in [0, total) satisfying pred.
template <class Pred>
std::uint64_t parallel_count(std::uint64_t total, const Limits& limits, Pred&& pred) {
  const unsigned workers = resolve_workers(limits.workers);
  const std::uint64_t chunk = detail::chunk_size(total, workers);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> count{0};
  detail::run_workers(workers, [&](unsigned) {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= total) return;
      limits.check_deadline();
      const std::uint64_t end = std::min(total, begin + chunk);
      std::uint64_t local = 0;
      for (std::uint64_t i = begin; i < end; ++i) local += pred(i) ? 1U : 0U;
      count += local;
    }
  });
  return count.load();
}

/// Each worker owns a State (made by make_state) and receives chunks of
/// [0, total) through body(state, begin, end). Returns the per-worker states
/// for the caller to merge; merge results must not depend on their order.
template <class State, class MakeState, class Body>
std::vector<State> parallel_chunks(std::uint64_t total, const Limits& limits,
                                   MakeState&& make_state, Body&& body) {
  const unsigned workers = resolve_workers(limits.workers);
  const std::uint64_t chunk = detail::chunk_size(total, workers);
  std::vector<State> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(make_state());
  std::atomic<std::uint64_t> next{0};
  detail::run_workers(workers, [&](unsigned w) {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= total) return;
      limits.check_deadline();
      body(states[w], begin, std::min(total, begin + chunk));
    }
  });
  return states;
}

}  // namespace combspec
