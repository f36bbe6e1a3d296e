#include "surdbits/surd.hpp"

#include <cmath>
#include <sstream>

#include "surdbits/error.hpp"

namespace surdbits {

QuadraticSurd make_surd(Int p, Int q, Nat s, std::uint64_t t) {
  if (s < Nat(2) || is_perfect_square(s)) {
    throw Error(ErrorKind::PerfectSquareRadicand, "radicand " + s.str() + " is a perfect square");
  }
  if (sgn(p) == 0 && sgn(q) == 0) t = 0;
  while (t > 0 && mpz_even_p(p.get_mpz_t()) && mpz_even_p(q.get_mpz_t())) {
    p /= 2;
    q /= 2;
    --t;
  }
  return QuadraticSurd(std::move(p), std::move(q), std::move(s), t);
}

bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.p_ != b.p_ || a.q_ != b.q_ || a.t_ != b.t_) return false;
  return a.is_rational() || a.s_ == b.s_;
}

double QuadraticSurd::approx() const {
  const double root = std::sqrt(s_.value().get_d());
  return (p_.get_d() + q_.get_d() * root) / std::ldexp(1.0, static_cast<int>(t_));
}

std::string QuadraticSurd::str() const {
  std::ostringstream os;
  os << "(" << p_.get_str() << (sgn(q_) < 0 ? " - " : " + ") << Int(abs(q_)).get_str() << "*sqrt("
     << s_.str() << "))/2^" << t_;
  return os.str();
}

QuadraticSurd square_surd(const QuadraticSurd& x) {
  Int p = x.p() * x.p() + x.q() * x.q() * x.s().value();
  Int q = 2 * x.p() * x.q();
  return make_surd(std::move(p), std::move(q), x.s(), 2 * x.t());
}

QuadraticSurd add_dyadic(const QuadraticSurd& x, const Int& num, std::uint64_t pow) {
  const std::uint64_t t = std::max(x.t(), pow);
  Int p = shift_left(x.p(), t - x.t()) + shift_left(num, t - pow);
  Int q = shift_left(x.q(), t - x.t());
  return make_surd(std::move(p), std::move(q), x.s(), t);
}

QuadraticSurd negate(const QuadraticSurd& x) { return make_surd(-x.p(), -x.q(), x.s(), x.t()); }

QuadraticSurd lambda_of(const Nat& s) {
  if (s < Nat(2) || is_perfect_square(s)) {
    throw Error(ErrorKind::PerfectSquareRadicand, "radicand " + s.str() + " is a perfect square");
  }
  return make_surd(-isqrt(s).value(), Int(1), s, 0);
}

QuadraticSurd one_minus(const QuadraticSurd& x) { return add_dyadic(negate(x), Int(1), 0); }

std::uint64_t minimal_scale(const Nat& s) { return bit_length(s.value()); }

LemmaPoints build_lemma_points(const Nat& s, std::uint64_t l) {
  if (s < Nat(2) || is_perfect_square(s)) {
    throw Error(ErrorKind::PerfectSquareRadicand, "radicand " + s.str() + " is a perfect square");
  }
  if (pow2(l) <= s.value()) {
    throw Error(ErrorKind::BadScale, "need 2^l > s, got l = " + std::to_string(l));
  }
  return LemmaPoints{
      make_surd(pow2(2 * l), Int(-1), s, 2 * l),
      make_surd(Int(-1), Int(1), s, l),
  };
}

}  // namespace surdbits
