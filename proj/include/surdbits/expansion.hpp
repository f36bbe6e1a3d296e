#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surdbits/bigint.hpp"
#include "surdbits/pinned.hpp"
#include "surdbits/surd.hpp"

namespace surdbits {

using Index = std::uint64_t;
using Bit = std::uint8_t;

enum class Exactness { TruncatedIrrational, TerminatingDyadic };

std::string_view to_string(Exactness e);

/// Finite prefix .b1 b2 ... bL of a binary expansion. Position 1 is the most
/// significant digit after the point. Terminating dyadics carry an implicit
/// all-zero tail.
class DyadicExpansion {
 public:
  DyadicExpansion() = default;
  DyadicExpansion(std::vector<Bit> bits, Exactness exactness);

  /// Parses a 0/1 string, most significant first.
  static DyadicExpansion from_string(std::string_view bits,
                                     Exactness exactness = Exactness::TruncatedIrrational);

  Index length() const noexcept { return bits_.size(); }
  Exactness exactness() const noexcept { return exactness_; }

  /// 1-based digit access.
  Bit at(Index j) const;
  std::span<const Bit> bits() const noexcept { return bits_; }

  /// First k digits read as an integer (digit 1 most significant).
  Int prefix_value(Index k) const;

  std::string str() const;

  friend bool operator==(const DyadicExpansion&, const DyadicExpansion&) = default;

 private:
  std::vector<Bit> bits_;
  Exactness exactness_ = Exactness::TruncatedIrrational;
};

/// Ones-count n-prefix frequency: f = ones / n, g = 1 - f.
struct FrequencyPoint {
  Index n = 0;
  Index ones = 0;
  Rational f;

  Rational zeros_fraction() const { return make_rational(Int(n - ones), Int(n)); }
};

/// Digits 1..L of x, which must lie in [0, 1) (OutOfRange otherwise).
DyadicExpansion digits(const QuadraticSurd& x, Index length, const PinOptions& opts = {});

/// Digits 1..L of sqrt(x) for x in [0, 1).
DyadicExpansion sqrt_digits(const QuadraticSurd& x, Index length, const PinOptions& opts = {});

/// Expansion built from the n-bit integer `value` (value < 2^n).
DyadicExpansion expansion_from_int(const Int& value, Index length, Exactness exactness);

DyadicExpansion complement_digits(const DyadicExpansion& e);

/// Throws IndexBeyondLength if any index exceeds e.length() or is zero.
std::vector<FrequencyPoint> freq_series(const DyadicExpansion& e, std::span<const Index> indices);

/// Smallest j with a_i == b_i for every i in [j, L]; nullopt if the last
/// digits differ. Evidence within the computed window only.
std::optional<Index> first_tail_agreement(const DyadicExpansion& a, const DyadicExpansion& b);

/// "n,ones,f_num,f_den"
std::string csv_row(const FrequencyPoint& p);
inline constexpr std::string_view kFrequencyCsvHeader = "n,ones,f_num,f_den";

}  // namespace surdbits
