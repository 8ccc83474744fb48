#pragma once

// Sweep kernels: run an independent check over a range of basis indices and
// report the first failure in index order. The serial loop is the reference;
// the OpenMP loop must return exactly the same counterexample.

#include "qsuper/report.hpp"

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsuper {

enum class Execution { serial, parallel };

namespace sweep {

template <class Check>
std::optional<Counterexample> first_failure_serial(std::size_t count, const Check& check) {
  for (std::size_t i = 0; i < count; ++i) {
    if (auto found = check(i)) return found;
  }
  return std::nullopt;
}

template <class Check>
std::optional<Counterexample> first_failure_parallel(std::size_t count, const Check& check) {
  std::vector<std::optional<Counterexample>> found(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> earliest{count};
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto index = static_cast<std::size_t>(i);
    if (index > earliest.load(std::memory_order_relaxed)) continue;
    try {
      found[index] = check(index);
    } catch (...) {
      errors[index] = std::current_exception();
    }
    if (found[index] || errors[index]) {
      std::size_t current = earliest.load(std::memory_order_relaxed);
      while (index < current && !earliest.compare_exchange_weak(current, index)) {
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (found[i]) return found[i];
  }
  return std::nullopt;
}

}  // namespace sweep

template <class Check>
std::optional<Counterexample> first_failure(std::size_t count, const Check& check, Execution exec) {
  if (exec == Execution::serial || count < 2) return sweep::first_failure_serial(count, check);
  return sweep::first_failure_parallel(count, check);
}

inline void set_worker_count(int workers) {
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#else
  (void)workers;
#endif
}

}  // namespace qsuper
