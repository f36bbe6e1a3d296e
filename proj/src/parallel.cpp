#include "surdbits/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace surdbits {

std::vector<DyadicExpansion> batch_digits(std::span<const QuadraticSurd> points, Index length,
                                          const EvalContext& ctx) {
  std::vector<DyadicExpansion> out(points.size());
  for_each_index(points.size(), ctx.policy, [&](std::size_t i) { out[i] = digits(points[i], length, ctx.pin); });
  return out;
}

std::vector<Int> batch_sqrt_floor(std::span<const QuadraticSurd> points, Index n, const EvalContext& ctx) {
  std::vector<Int> out(points.size());
  for_each_index(points.size(), ctx.policy,
                 [&](std::size_t i) { out[i] = pinned_floor_sqrt(points[i], n, ctx.pin).value(); });
  return out;
}

int parallel_width() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace surdbits
