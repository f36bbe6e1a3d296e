#include "surdbits/bigint.hpp"

#include "surdbits/error.hpp"

namespace surdbits {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PerfectSquareRadicand: return "PerfectSquareRadicand";
    case ErrorKind::BadScale: return "BadScale";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::IndexBeyondLength: return "IndexBeyondLength";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InconsistentFlip: return "InconsistentFlip";
    case ErrorKind::RationalPoint: return "RationalPoint";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Nat::Nat(Int v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw Error(ErrorKind::InvalidArgument, "negative value for Nat");
}

Int isqrt(const Int& v) {
  if (sgn(v) < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

Nat isqrt(const Nat& v) { return Nat(isqrt(v.value())); }

bool is_perfect_square(const Nat& v) { return mpz_perfect_square_p(v.value().get_mpz_t()) != 0; }

Int floor_shift_right(const Int& v, std::uint64_t k) {
  Int r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

Int shift_left(const Int& v, std::uint64_t k) {
  Int r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

Int pow2(std::uint64_t k) { return shift_left(Int(1), k); }

std::uint64_t bit_length(const Int& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

bool test_bit(const Int& v, std::uint64_t k) { return mpz_tstbit(v.get_mpz_t(), k) != 0; }

std::uint64_t popcount(const Int& v) {
  if (sgn(v) < 0) throw Error(ErrorKind::InvalidArgument, "popcount of negative value");
  return mpz_popcount(v.get_mpz_t());
}

Rational make_rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace surdbits
