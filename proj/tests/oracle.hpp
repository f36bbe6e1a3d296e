#pragma once

// Test-only reference computations. These use closed forms and brute-force
// search over exact rationals; none of them goes through interval refinement
// or the library's search loops.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "surdbits/surd.hpp"

namespace oracle {

inline mpz_class root_floor(const mpz_class& v) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline mpz_class p2(std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// floor(x * 2^n): floor(a + b sqrt(c)) closed form, then an exact division.
inline mpz_class floor_scaled(const surdbits::QuadraticSurd& x, std::uint64_t n) {
  const mpz_class a = x.p() * p2(n);
  mpz_class whole;
  if (sgn(x.q()) == 0) {
    whole = a;
  } else {
    const mpz_class b2 = x.q() * x.q() * x.s().value() * p2(2 * n);
    whole = sgn(x.q()) > 0 ? mpz_class(a + root_floor(b2)) : mpz_class(a - root_floor(b2) - 1);
  }
  return fdiv(whole, p2(x.t()));
}

inline mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

/// floor(x) for a rational.
inline mpz_class floor_q(const mpq_class& v) { return fdiv(v.get_num(), v.get_den()); }

/// floor(sqrt(v) * 2^n) for a non-negative rational v, by bisection.
inline mpz_class floor_sqrt_q(const mpq_class& v, std::uint64_t n) {
  const mpq_class target = v * mpq_class(p2(2 * n));
  mpz_class lo = 0;
  mpz_class hi = floor_q(target) + 1;  // c^2 <= target < hi^2
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (mpq_class(mid * mid) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// floor(sqrt(x) * 2^n) for a surd: brackets x * 4^(n+g) between integers and
/// bisects on the bracket ends; g grows until both agree.
inline mpz_class floor_sqrt_scaled(const surdbits::QuadraticSurd& x, std::uint64_t n) {
  for (std::uint64_t g = 16;; g *= 2) {
    const mpz_class w = floor_scaled(x, 2 * (n + g));
    const mpz_class lo = root_floor(w);
    mpz_class hi = root_floor(w + 1);
    if (hi * hi == w + 1) hi -= 1;
    if (fdiv(lo, p2(g)) == fdiv(hi, p2(g))) return fdiv(lo, p2(g));
  }
}

inline std::string bit_string(const mpz_class& v, std::uint64_t len) {
  std::string s = len == 0 ? std::string() : v.get_str(2);
  return std::string(len - s.size(), '0') + s;
}

inline std::string digit_string(const surdbits::QuadraticSurd& x, std::uint64_t len) {
  return bit_string(floor_scaled(x, len), len);
}

inline mpq_class h_value(const surdbits::QuadraticSurd& x, std::uint64_t n) {
  const mpz_class f = floor_sqrt_scaled(x, n);
  mpq_class r(static_cast<unsigned long>(mpz_popcount(f.get_mpz_t())), n);
  r.canonicalize();
  return r;
}

/// N_r by direct comparison of squared truncations as rationals.
inline std::uint64_t brute_nr(const surdbits::QuadraticSurd& omega, std::uint64_t r) {
  for (std::uint64_t n = 2;; ++n) {
    const mpz_class a = floor_scaled(omega, n - 1);
    const mpq_class lo = ratio(a, p2(n - 1));
    const mpq_class hi = ratio(a + 1, p2(n - 1));
    if (floor_q(lo * lo * p2(r)) == floor_q(hi * hi * p2(r))) return n;
  }
}

/// M_n by rational bisection of the square-root endpoints.
inline std::uint64_t brute_mn(const surdbits::QuadraticSurd& nu, std::uint64_t n) {
  for (std::uint64_t m = 1;; ++m) {
    const mpz_class a = floor_scaled(nu, m);
    const mpq_class lo = ratio(a, p2(m));
    const mpq_class hi = ratio(a + 1, p2(m));
    const mpz_class c = floor_sqrt_q(lo, n);
    const mpq_class right = ratio(c + 1, p2(n));
    if (right * right >= hi) return m;
  }
}

}  // namespace oracle
