#include "surdbits/expansion.hpp"

#include <algorithm>

#include "surdbits/error.hpp"

namespace surdbits {

std::string_view to_string(Exactness e) {
  return e == Exactness::TerminatingDyadic ? "TerminatingDyadic" : "TruncatedIrrational";
}

DyadicExpansion::DyadicExpansion(std::vector<Bit> bits, Exactness exactness)
    : bits_(std::move(bits)), exactness_(exactness) {
  for (Bit b : bits_) {
    if (b > 1) throw Error(ErrorKind::InvalidArgument, "digit must be 0 or 1");
  }
}

DyadicExpansion DyadicExpansion::from_string(std::string_view bits, Exactness exactness) {
  std::vector<Bit> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidArgument, "bit string may only contain 0 and 1");
    }
    out.push_back(static_cast<Bit>(c - '0'));
  }
  return DyadicExpansion(std::move(out), exactness);
}

Bit DyadicExpansion::at(Index j) const {
  if (j == 0 || j > bits_.size()) {
    throw Error(ErrorKind::IndexBeyondLength,
                "digit " + std::to_string(j) + " of a " + std::to_string(bits_.size()) + "-digit expansion");
  }
  return bits_[j - 1];
}

Int DyadicExpansion::prefix_value(Index k) const {
  if (k > bits_.size()) {
    throw Error(ErrorKind::IndexBeyondLength, "prefix " + std::to_string(k) + " beyond length");
  }
  if (k == 0) return Int(0);
  std::string s;
  s.reserve(k);
  for (Index j = 0; j < k; ++j) s.push_back(static_cast<char>('0' + bits_[j]));
  return Int(s, 2);
}

std::string DyadicExpansion::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

DyadicExpansion expansion_from_int(const Int& value, Index length, Exactness exactness) {
  if (sgn(value) < 0 || bit_length(value) > length) {
    throw Error(ErrorKind::OutOfRange, "value outside [0, 1)");
  }
  std::vector<Bit> bits(length);
  for (Index j = 1; j <= length; ++j) bits[j - 1] = test_bit(value, length - j) ? 1 : 0;
  return DyadicExpansion(std::move(bits), exactness);
}

DyadicExpansion digits(const QuadraticSurd& x, Index length, const PinOptions& opts) {
  const Int scaled = pinned_floor(x, length, opts);
  if (sgn(scaled) < 0 || bit_length(scaled) > length) {
    throw Error(ErrorKind::OutOfRange, x.str() + " is not in [0, 1)");
  }
  return expansion_from_int(scaled, length,
                            x.is_rational() ? Exactness::TerminatingDyadic : Exactness::TruncatedIrrational);
}

DyadicExpansion sqrt_digits(const QuadraticSurd& x, Index length, const PinOptions& opts) {
  if (sgn(pinned_floor(x, 0, opts)) != 0) {
    throw Error(ErrorKind::OutOfRange, x.str() + " is not in [0, 1)");
  }
  const Nat scaled = pinned_floor_sqrt(x, length, opts);
  // sqrt of a dyadic is dyadic iff the scaled floor is exact; only then does
  // the expansion terminate.
  Exactness ex = Exactness::TruncatedIrrational;
  if (x.is_rational()) {
    const QuadraticSurd sq = square_surd(make_surd(scaled.value(), Int(0), x.s(), length));
    if (sq == x) ex = Exactness::TerminatingDyadic;
  }
  return expansion_from_int(scaled.value(), length, ex);
}

DyadicExpansion complement_digits(const DyadicExpansion& e) {
  std::vector<Bit> bits(e.bits().begin(), e.bits().end());
  for (Bit& b : bits) b ^= 1;
  return DyadicExpansion(std::move(bits), e.exactness());
}

std::vector<FrequencyPoint> freq_series(const DyadicExpansion& e, std::span<const Index> indices) {
  for (Index n : indices) {
    if (n == 0 || n > e.length()) {
      throw Error(ErrorKind::IndexBeyondLength,
                  "index " + std::to_string(n) + " outside 1.." + std::to_string(e.length()));
    }
  }
  std::vector<FrequencyPoint> out;
  out.reserve(indices.size());
  // Prefix counts are built once; indices may come in any order.
  std::vector<Index> prefix(e.length() + 1, 0);
  const auto bits = e.bits();
  for (Index j = 0; j < bits.size(); ++j) prefix[j + 1] = prefix[j] + bits[j];
  for (Index n : indices) {
    out.push_back(FrequencyPoint{n, prefix[n], make_rational(Int(prefix[n]), Int(n))});
  }
  return out;
}

std::optional<Index> first_tail_agreement(const DyadicExpansion& a, const DyadicExpansion& b) {
  if (a.length() != b.length()) {
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(a.length()) + " vs " + std::to_string(b.length()) + " digits");
  }
  Index j = a.length();
  while (j >= 1 && a.at(j) == b.at(j)) --j;
  if (j == a.length()) return std::nullopt;
  return j + 1;
}

std::string csv_row(const FrequencyPoint& p) {
  return std::to_string(p.n) + "," + std::to_string(p.ones) + "," + p.f.get_num().get_str() + "," +
         p.f.get_den().get_str();
}

}  // namespace surdbits
