#pragma once

// Finite-difference calculus on digit sequences.
//
// A perturbation pair flips finitely many X digits of a base point omega,
// giving omega1 = omega + sum dx_j 2^-j, and the corresponding U-space pair
// nu = omega^2, nu1 = omega1^2. Partial differences are taken along the
// canonical hybrid ordering:
//   U-space  H_i agrees with nu on digits 1..i and with nu1 beyond (H_0 = nu1),
//            dh_{n,i} = h_n(H_{i-1}) - h_n(H_i);
//   X-space  G_j agrees with omega on digits 1..j and with omega1 beyond,
//            dU_{i,j} = U_i(G_{j-1}) - U_i(G_j).
// A quotient whose increment is zero is taken to be zero. Every evaluation
// point is a quadratic surd, so all values are exact rationals.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surdbits/bigint.hpp"
#include "surdbits/boxes.hpp"
#include "surdbits/expansion.hpp"
#include "surdbits/parallel.hpp"
#include "surdbits/surd.hpp"

namespace surdbits {

struct Flip {
  Index j = 0;
  int dx = 0;  ///< +1 turns digit j from 0 to 1, -1 from 1 to 0

  friend bool operator==(const Flip&, const Flip&) = default;
};

class PerturbationPair {
 public:
  const QuadraticSurd& omega() const noexcept { return omega_; }
  const QuadraticSurd& omega1() const noexcept { return omega1_; }
  const QuadraticSurd& nu() const noexcept { return nu_; }
  const QuadraticSurd& nu1() const noexcept { return nu1_; }
  /// Sorted by position, one entry per position.
  const std::vector<Flip>& flips() const noexcept { return flips_; }

  /// dx_j, zero where no flip applies.
  int dx(Index j) const;

 private:
  friend PerturbationPair apply_x_flips(const QuadraticSurd&, std::vector<Flip>, const PinOptions&);
  PerturbationPair(QuadraticSurd omega, std::vector<Flip> flips, QuadraticSurd omega1, QuadraticSurd nu,
                   QuadraticSurd nu1)
      : omega_(std::move(omega)),
        omega1_(std::move(omega1)),
        nu_(std::move(nu)),
        nu1_(std::move(nu1)),
        flips_(std::move(flips)) {}

  QuadraticSurd omega_;
  QuadraticSurd omega1_;
  QuadraticSurd nu_;
  QuadraticSurd nu1_;
  std::vector<Flip> flips_;
};

/// Errors: InconsistentFlip when a direction contradicts the current digit or
/// a position repeats; OutOfRange / RationalPoint for unusable points.
PerturbationPair apply_x_flips(const QuadraticSurd& omega, std::vector<Flip> flips, const PinOptions& opts = {});

/// Flip that toggles digit j of omega.
Flip toggle_flip(const QuadraticSurd& omega, Index j, const PinOptions& opts = {});

struct DeltaU {
  Index i = 0;
  int du = 0;

  friend bool operator==(const DeltaU&, const DeltaU&) = default;
};

std::vector<DeltaU> delta_u(const PerturbationPair& pair, Index i_max, const PinOptions& opts = {});

/// H_i; H_0 = nu1.
QuadraticSurd hybrid_point(const PerturbationPair& pair, Index i, const PinOptions& opts = {});

/// G_j; G_0 = omega1.
QuadraticSurd x_hybrid_point(const PerturbationPair& pair, Index j, const PinOptions& opts = {});

/// Fraction of ones among the first n digits of sqrt(point); point in [0, 1).
Rational eval_h_n(const QuadraticSurd& point, Index n, const PinOptions& opts = {});

Rational partial_diff_h(const PerturbationPair& pair, Index n, Index i, const PinOptions& opts = {});

/// (U_i(G_{j-1}) - U_i(G_j)) / dx_j, zero when dx_j = 0.
Rational partial_dU_dX(const PerturbationPair& pair, Index i, Index j, const PinOptions& opts = {});

std::vector<QuadraticSurd> tail_variants(const QuadraticSurd& nu, Index k, const PinOptions& opts = {});

/// h_n(H_k) - h_n(nu).
Rational frozen_prefix_delta(const PerturbationPair& pair, Index k, Index n, const PinOptions& opts = {});

inline constexpr Index kMaxVariantBits = 16;
inline constexpr Index kIMaxCeiling = 4096;

/// 4 * max(n, predicted support), capped at 4096.
Index default_i_max(Index n, Index predicted_support);

struct DiffEntry {
  Index i = 0;  ///< coordinate (or n, for decay series)
  int du = 0;
  Rational value;
  std::optional<Rational> factor;  ///< chain rule: dU_{i,j}/dx_j
};

struct VariantEntry {
  std::string pattern;  ///< first k U digits of the variant
  Rational h_value;
  Rational delta;
};

struct Claim {
  std::string source;
  Rational expected;
};

struct NamedCheck {
  std::string name;
  bool passed = false;
};

/// Exact tables plus verdicts; verdicts are functions of the tables only.
struct DifferenceReport {
  std::string op;
  std::string convention;
  Index n = 0;
  std::vector<Index> n_list;
  std::optional<Index> k;
  std::optional<Index> j;
  std::optional<int> dx;
  Rational total;  ///< h_n(nu1) - h_n(nu) where meaningful
  std::vector<DiffEntry> entries;
  std::vector<Rational> partial_sums;  ///< index I' = 0..I
  std::optional<Index> support_bound;
  std::optional<Index> predicted_support;
  std::optional<Index> n_max;  ///< invariance: max N_k over the variants
  std::optional<Rational> head_max;  ///< decay: max |value| over the first half
  std::optional<Rational> tail_max;  ///< decay: max |value| over the last half
  std::vector<VariantEntry> variants;
  std::optional<Claim> claim;
  Rational computed;
  std::string verdict;
  bool trivial = false;
  std::vector<NamedCheck> checks;

  bool all_checks_pass() const;
};

inline constexpr const char* kHybridConvention =
    "canonical hybrids: H_i = nu on 1..i, nu1 beyond; G_j = omega on 1..j, omega1 beyond; 0/0 = 0";

DifferenceReport total_diff_check(const PerturbationPair& pair, Index n, Index i_max, const EvalContext& ctx = {});

DifferenceReport chain_rule_check(const PerturbationPair& pair, Index n, Index j, Index i_max,
                                  const EvalContext& ctx = {});

DifferenceReport decay_series(const PerturbationPair& pair, Index k, std::vector<Index> n_list,
                              const EvalContext& ctx = {});

DifferenceReport invariance_check(const QuadraticSurd& nu, const PerturbationPair& pair, Index k, Index n,
                                  const EvalContext& ctx = {});

}  // namespace surdbits
