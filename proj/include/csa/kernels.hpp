#pragma once

// Basis-tuple scanning kernels. Every exact check in the library is phrased
// as "does predicate(t) hold for every flat tuple index t in [0, count)".
// Two implementations exist: a plain serial loop kept as the reference, and
// an OpenMP loop. Both return the smallest failing index, so results do not
// depend on thread scheduling.

#include <array>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

namespace csa::kernels {

enum class Execution { Serial, Parallel };

Execution execution();
void set_execution(Execution mode);

/// Restores the previous execution mode on destruction.
class ScopedExecution {
 public:
  explicit ScopedExecution(Execution mode) : saved_(execution()) { set_execution(mode); }
  ~ScopedExecution() { set_execution(saved_); }
  ScopedExecution(const ScopedExecution&) = delete;
  ScopedExecution& operator=(const ScopedExecution&) = delete;

 private:
  Execution saved_;
};

/// Below this many tuples the parallel path falls back to the serial loop.
inline constexpr std::size_t kParallelThreshold = 64;

template <class Pred>
std::optional<std::size_t> first_failure_serial(std::size_t count, Pred&& ok) {
  for (std::size_t t = 0; t < count; ++t) {
    if (!ok(t)) return t;
  }
  return std::nullopt;
}

template <class Pred>
std::optional<std::size_t> first_failure_parallel(std::size_t count, Pred&& ok) {
  std::atomic<std::size_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto t = static_cast<std::size_t>(s);
    if (t >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (!ok(t)) {
        std::size_t cur = best.load(std::memory_order_relaxed);
        while (t < cur && !best.compare_exchange_weak(cur, t, std::memory_order_relaxed)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  const std::size_t found = best.load();
  if (found == count) return std::nullopt;
  return found;
}

/// Smallest t in [0, count) with !ok(t), dispatched on the current mode.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t count, Pred&& ok) {
  if (execution() == Execution::Parallel && count >= kParallelThreshold) {
    return first_failure_parallel(count, ok);
  }
  return first_failure_serial(count, ok);
}

template <class Pred>
std::vector<char> evaluate_all_serial(std::size_t count, Pred&& pred) {
  std::vector<char> out(count, 0);
  for (std::size_t t = 0; t < count; ++t) out[t] = pred(t) ? 1 : 0;
  return out;
}

template <class Pred>
std::vector<char> evaluate_all_parallel(std::size_t count, Pred&& pred) {
  std::vector<char> out(count, 0);
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    try {
      out[static_cast<std::size_t>(s)] = pred(static_cast<std::size_t>(s)) ? 1 : 0;
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// pred(t) for every t, in index order of the result.
template <class Pred>
std::vector<char> evaluate_all(std::size_t count, Pred&& pred) {
  if (execution() == Execution::Parallel && count >= kParallelThreshold) {
    return evaluate_all_parallel(count, pred);
  }
  return evaluate_all_serial(count, pred);
}

/// Decodes a flat index into a tuple with the given extents (last index fastest).
template <std::size_t N>
std::array<std::size_t, N> unflatten(std::size_t t, const std::array<std::size_t, N>& extents) {
  std::array<std::size_t, N> out{};
  for (std::size_t d = N; d-- > 0;) {
    out[d] = t % extents[d];
    t /= extents[d];
  }
  return out;
}

template <std::size_t N>
std::size_t tuple_count(const std::array<std::size_t, N>& extents) {
  std::size_t n = 1;
  for (auto e : extents) n *= e;
  return n;
}

}  // namespace csa::kernels
