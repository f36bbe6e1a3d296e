#pragma once

// Arbitrary-precision integer plumbing. Int and Rational are GMP values
// (canonical by construction); Nat is a checked non-negative wrapper used
// where the domain forbids negatives.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace surdbits {

using Int = mpz_class;
using Rational = mpq_class;

class Nat {
 public:
  Nat() = default;
  Nat(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Nat(Int v);

  const Int& value() const noexcept { return value_; }
  std::string str() const { return value_.get_str(); }

  friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
  friend auto operator<=>(const Nat& a, const Nat& b) { return cmp(a.value_, b.value_) <=> 0; }

 private:
  Int value_{0};
};

/// Largest r with r*r <= v.
Nat isqrt(const Nat& v);
Int isqrt(const Int& v);  // v >= 0

bool is_perfect_square(const Nat& v);

/// floor(v / 2^k), rounding toward negative infinity.
Int floor_shift_right(const Int& v, std::uint64_t k);
Int shift_left(const Int& v, std::uint64_t k);
Int pow2(std::uint64_t k);

/// Number of significant bits of |v| (0 for v == 0).
std::uint64_t bit_length(const Int& v);

/// Value of bit k (k = 0 is least significant) of a non-negative integer.
bool test_bit(const Int& v, std::uint64_t k);

std::uint64_t popcount(const Int& v);

Rational make_rational(const Int& num, const Int& den);

}  // namespace surdbits
