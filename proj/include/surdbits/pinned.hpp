#pragma once

// Exact floors of quadratic surds and of their square roots at a binary
// scale. Irrational values are pinned by interval refinement: an enclosure
// of the scaled value is narrowed with an escalating number of guard bits
// until both ends share one floor. Rational values take an exact path.

#include <cstdint>

#include "surdbits/bigint.hpp"
#include "surdbits/surd.hpp"

namespace surdbits {

struct PinOptions {
  std::uint64_t initial_guard_bits = 64;
  std::uint64_t guard_bit_cap = std::uint64_t{1} << 21;
};

/// floor(value(x) * 2^n). Throws PrecisionExhausted past the guard-bit cap.
Int pinned_floor(const QuadraticSurd& x, std::uint64_t n, const PinOptions& opts = {});

/// floor(sqrt(value(x)) * 2^n). Requires value(x) >= 0 (OutOfRange).
Nat pinned_floor_sqrt(const QuadraticSurd& x, std::uint64_t n, const PinOptions& opts = {});

}  // namespace surdbits
