#pragma once

// Enumeration of verification grids and an order-preserving parallel map.

#include "itersplit/farey_frame.hpp"
#include "itersplit/iteration.hpp"
#include "itersplit/two_bridge.hpp"

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace itersplit {

/// Valid frames with every entry in [-bound, bound], in lexicographic order.
std::vector<FareyFrame> valid_frames(std::int64_t bound);

/// All sequences of length 1..max_length over `values`, shortest first and
/// lexicographic (in the order of `values`) within a length.
std::vector<TwistSequence> twist_sequences(std::size_t max_length,
                                           const std::vector<std::int64_t>& values);

/// Nonzero integers in [-bound, bound], ascending.
std::vector<std::int64_t> nonzero_range(std::int64_t bound);

/// Every valid continued fraction with depth <= max_depth, a_i = +-1 and
/// b_i drawn from b_values (b_0 = 0 and k_i = 0 cases are skipped).
std::vector<ContinuedFraction2B> continued_fractions(std::size_t max_depth,
                                                     const std::vector<std::int64_t>& b_values);

/// `count` distinct indices in [0, total), spread over the whole range by a
/// fixed multiplicative permutation. Returns every index, in order, when
/// count >= total.
std::vector<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t count);

/// Worker count from ITERSPLIT_WORKERS, else the hardware concurrency.
unsigned worker_count();

/// results[i] = fn(i) for i in [0, n), evaluated on `workers` threads. The
/// output order never depends on scheduling. The first exception thrown by
/// any fn is rethrown after all workers stop.
template <typename Result>
std::vector<Result> parallel_map(std::size_t n, const std::function<Result(std::size_t)>& fn,
                                 unsigned workers = worker_count()) {
  std::vector<std::optional<Result>> slots(n);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n ? n : 1)));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Result> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace itersplit
