#include "surdbits/boxes.hpp"

#include <string>

#include "surdbits/error.hpp"

namespace surdbits {
namespace {

void require_open_unit_irrational(const QuadraticSurd& x, const char* what, const PinOptions& opts) {
  if (x.is_rational()) throw Error(ErrorKind::RationalPoint, std::string(what) + " must be irrational");
  if (sgn(pinned_floor(x, 0, opts)) != 0) {
    throw Error(ErrorKind::OutOfRange, std::string(what) + " " + x.str() + " is not in (0, 1)");
  }
}

// a / 2^len and (a+1) / 2^len squared land in the same half-open r box.
bool squares_share_box(const Int& a, Index len, Index r) {
  return box_index_of_dyadic(a * a, 2 * len, r) == box_index_of_dyadic((a + 1) * (a + 1), 2 * len, r);
}

// `truncation(len)` yields floor(2^len * omega).
template <typename Truncation>
Index search_nr(Index r, Index cap, Truncation&& truncation) {
  for (Index n = 2; n <= cap; ++n) {
    if (squares_share_box(truncation(n - 1), n - 1, r)) return n;
  }
  throw Error(ErrorKind::SearchExhausted, "N_r not found for r = " + std::to_string(r) +
                                              " within cap " + std::to_string(cap));
}

}  // namespace

BoxIndex box_index(const QuadraticSurd& x, Index r, const PinOptions& opts) {
  Int k = pinned_floor(x, r, opts);
  if (sgn(k) < 0) throw Error(ErrorKind::OutOfRange, "negative value " + x.str());
  return BoxIndex{r, std::move(k)};
}

BoxIndex box_index_of_dyadic(const Int& a, Index len, Index r) {
  if (sgn(a) < 0) throw Error(ErrorKind::OutOfRange, "negative dyadic");
  Int k = r >= len ? shift_left(a, r - len) : floor_shift_right(a, len - r);
  return BoxIndex{r, std::move(k)};
}

bool same_box(const QuadraticSurd& a, const QuadraticSurd& b, Index r, const PinOptions& opts) {
  return box_index(a, r, opts) == box_index(b, r, opts);
}

Index compute_Nr(const QuadraticSurd& omega, Index r, Index cap, const PinOptions& opts) {
  require_open_unit_irrational(omega, "omega", opts);
  if (cap < 2) cap = 2;
  const Int full = pinned_floor(omega, cap, opts);
  return search_nr(r, cap, [&](Index len) { return floor_shift_right(full, cap - len); });
}

Index compute_Nr_of_sqrt(const QuadraticSurd& nu, Index r, Index cap, const PinOptions& opts) {
  require_open_unit_irrational(nu, "nu", opts);
  if (cap < 2) cap = 2;
  const Int full = pinned_floor_sqrt(nu, cap, opts).value();
  return search_nr(r, cap, [&](Index len) { return floor_shift_right(full, cap - len); });
}

std::optional<Int> sqrt_interval_box(const Int& a, Index m, Index n) {
  // c = floor(2^n sqrt(a / 2^m)) = floor(isqrt(a * 2^(2n + m mod 2)) / 2^ceil(m/2))
  const Index odd = m & 1;
  Int c = floor_shift_right(isqrt(shift_left(a, 2 * n + odd)), (m + odd) / 2);
  // sqrt((a+1)/2^m) <= (c+1)/2^n  <=>  (c+1)^2 2^m >= (a+1) 4^n
  if (shift_left((c + 1) * (c + 1), m) >= shift_left(a + 1, 2 * n)) return c;
  return std::nullopt;
}

Index compute_Mn(const QuadraticSurd& nu, Index n, Index cap, const PinOptions& opts) {
  require_open_unit_irrational(nu, "nu", opts);
  const Int full = pinned_floor(nu, cap, opts);
  for (Index m = 1; m <= cap; ++m) {
    if (sqrt_interval_box(floor_shift_right(full, cap - m), m, n)) return m;
  }
  throw Error(ErrorKind::SearchExhausted, "M_n not found for n = " + std::to_string(n) +
                                              " within cap " + std::to_string(cap));
}

PrefixDetermination x_prefix_from_u_prefix(std::span<const Bit> u_prefix, Index n) {
  const DyadicExpansion u(std::vector<Bit>(u_prefix.begin(), u_prefix.end()), Exactness::TruncatedIrrational);
  const Index m = u.length();
  PrefixDetermination out;
  out.witness_m = m;
  if (auto c = sqrt_interval_box(u.prefix_value(m), m, n)) {
    out.determined = true;
    out.x_prefix = expansion_from_int(*c, n, Exactness::TruncatedIrrational);
  }
  return out;
}

}  // namespace surdbits
