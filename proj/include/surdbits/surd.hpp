#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "surdbits/bigint.hpp"

namespace surdbits {

/// Exact real (p + q*sqrt(s)) / 2^t with s >= 2 not a perfect square.
///
/// Values are kept canonical: while t > 0 and both p and q are even, the
/// common factor of two is cancelled. Equality compares canonical fields;
/// rational values (q == 0) compare by (p, t) only.
class QuadraticSurd {
 public:
  const Int& p() const noexcept { return p_; }
  const Int& q() const noexcept { return q_; }
  const Nat& s() const noexcept { return s_; }
  std::uint64_t t() const noexcept { return t_; }

  bool is_rational() const { return sgn(q_) == 0; }

  /// Nearest double; for display only, never used to decide anything.
  double approx() const;

  /// "(p + q*sqrt(s))/2^t"
  std::string str() const;

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b);

 private:
  friend QuadraticSurd make_surd(Int p, Int q, Nat s, std::uint64_t t);
  QuadraticSurd(Int p, Int q, Nat s, std::uint64_t t)
      : p_(std::move(p)), q_(std::move(q)), s_(std::move(s)), t_(t) {}

  Int p_;
  Int q_;
  Nat s_;
  std::uint64_t t_ = 0;
};

/// Throws PerfectSquareRadicand when s is a perfect square (or s < 2).
QuadraticSurd make_surd(Int p, Int q, Nat s, std::uint64_t t);

QuadraticSurd square_surd(const QuadraticSurd& x);

/// x + num / 2^pow
QuadraticSurd add_dyadic(const QuadraticSurd& x, const Int& num, std::uint64_t pow);

QuadraticSurd negate(const QuadraticSurd& x);

/// sqrt(s) - floor(sqrt(s)), the fractional part of sqrt(s).
QuadraticSurd lambda_of(const Nat& s);

/// 1 - x
QuadraticSurd one_minus(const QuadraticSurd& x);

struct LemmaPoints {
  QuadraticSurd omega1;  ///< 1 - sqrt(s) / 2^(2l)
  QuadraticSurd omega2;  ///< (sqrt(s) - 1) / 2^l
};

/// Requires 2^l > s (BadScale otherwise).
LemmaPoints build_lemma_points(const Nat& s, std::uint64_t l);

/// Smallest l with 2^l > s.
std::uint64_t minimal_scale(const Nat& s);

}  // namespace surdbits
