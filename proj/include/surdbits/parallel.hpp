#pragma once

// Batch kernels over independent evaluation points. Each kernel has a serial
// reference path and an OpenMP path; results are written by index, so both
// paths return identical vectors. If any element throws, the exception of
// the lowest failing index is rethrown after the loop.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "surdbits/bigint.hpp"
#include "surdbits/expansion.hpp"
#include "surdbits/pinned.hpp"
#include "surdbits/surd.hpp"

namespace surdbits {

enum class ExecPolicy { Serial, Parallel };

struct EvalContext {
  PinOptions pin{};
  ExecPolicy policy = ExecPolicy::Parallel;
};

/// Calls body(i) for i in [0, count) under the given policy.
template <typename Body>
void for_each_index(std::size_t count, ExecPolicy policy, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  if (policy == ExecPolicy::Parallel) {
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<DyadicExpansion> batch_digits(std::span<const QuadraticSurd> points, Index length,
                                          const EvalContext& ctx = {});

/// floor(2^n sqrt(p)) for every point.
std::vector<Int> batch_sqrt_floor(std::span<const QuadraticSurd> points, Index n, const EvalContext& ctx = {});

/// Number of worker threads the parallel path will use.
int parallel_width();

}  // namespace surdbits
