#include "surdbits/pinned.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "surdbits/error.hpp"

namespace surdbits {
namespace {

Int rational_floor(const QuadraticSurd& x, std::uint64_t n) {
  if (n >= x.t()) return shift_left(x.p(), n - x.t());
  return floor_shift_right(x.p(), x.t() - n);
}

// One refinement attempt with `guard` extra bits; empty when the enclosure
// still straddles an integer.
std::optional<Int> try_pin_floor(const QuadraticSurd& x, std::uint64_t n, std::uint64_t guard) {
  const auto shift = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(x.t());
  const auto qbits = static_cast<std::int64_t>(bit_length(x.q()));
  const std::uint64_t m =
      static_cast<std::uint64_t>(std::max<std::int64_t>(0, shift + qbits + static_cast<std::int64_t>(guard)));
  const std::uint64_t denom_bits = x.t() + m - n;

  // r/2^m < sqrt(s) < (r+1)/2^m, strict because s is not a square.
  const Int root = isqrt(shift_left(x.s().value(), 2 * m));
  Int lo = shift_left(x.p(), m);
  Int hi = lo;
  if (sgn(x.q()) > 0) {
    lo += x.q() * root;
    hi += x.q() * (root + 1);
  } else {
    lo += x.q() * (root + 1);
    hi += x.q() * root;
  }
  Int flo = floor_shift_right(lo, denom_bits);
  if (flo != floor_shift_right(hi, denom_bits)) return std::nullopt;
  return flo;
}

template <typename Attempt>
auto escalate(const PinOptions& opts, const char* what, Attempt&& attempt) {
  std::uint64_t guard = std::max<std::uint64_t>(1, std::min(opts.initial_guard_bits, opts.guard_bit_cap));
  for (;;) {
    if (auto r = attempt(guard)) return *std::move(r);
    if (guard >= opts.guard_bit_cap) {
      throw Error(ErrorKind::PrecisionExhausted,
                  std::string(what) + " not pinned within " + std::to_string(opts.guard_bit_cap) + " guard bits");
    }
    guard = std::min(guard * 2, opts.guard_bit_cap);
  }
}

}  // namespace

Int pinned_floor(const QuadraticSurd& x, std::uint64_t n, const PinOptions& opts) {
  if (x.is_rational()) return rational_floor(x, n);
  return escalate(opts, "floor", [&](std::uint64_t guard) { return try_pin_floor(x, n, guard); });
}

Nat pinned_floor_sqrt(const QuadraticSurd& x, std::uint64_t n, const PinOptions& opts) {
  if (x.is_rational()) {
    if (sgn(x.p()) < 0) throw Error(ErrorKind::OutOfRange, "square root of negative value " + x.str());
    // sqrt(p / 2^t) * 2^n = sqrt(p * 2^(2n + t mod 2)) / 2^ceil(t/2)
    const std::uint64_t odd = x.t() & 1;
    return Nat(floor_shift_right(isqrt(shift_left(x.p(), 2 * n + odd)), (x.t() + odd) / 2));
  }
  if (sgn(pinned_floor(x, 0, opts)) < 0) {
    throw Error(ErrorKind::OutOfRange, "square root of negative value " + x.str());
  }
  Int result = escalate(opts, "sqrt floor", [&](std::uint64_t guard) -> std::optional<Int> {
    // value * 4^(n+guard) lies strictly inside (scaled, scaled + 1).
    const Int scaled = pinned_floor(x, 2 * (n + guard), opts);
    const Int lo = isqrt(scaled);
    Int hi = isqrt(scaled + 1);
    if (hi * hi == scaled + 1) hi -= 1;
    Int flo = floor_shift_right(lo, guard);
    if (flo != floor_shift_right(hi, guard)) return std::nullopt;
    return flo;
  });
  return Nat(std::move(result));
}

}  // namespace surdbits
