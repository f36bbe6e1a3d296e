#include "surdbits/findiff.hpp"

#include <algorithm>
#include <string>

#include "surdbits/error.hpp"

namespace surdbits {
namespace {

void require_unit_interval(const QuadraticSurd& x, const char* what, const PinOptions& opts) {
  if (sgn(pinned_floor(x, 0, opts)) != 0) {
    throw Error(ErrorKind::OutOfRange, std::string(what) + " " + x.str() + " is not in [0, 1)");
  }
}

// Replaces the first `len` digits of `base` by the first `len` digits of `source`.
QuadraticSurd splice_prefix(const QuadraticSurd& base, const QuadraticSurd& source, Index len,
                            const PinOptions& opts) {
  if (len == 0) return base;
  return add_dyadic(base, pinned_floor(source, len, opts) - pinned_floor(base, len, opts), len);
}

Rational h_from_sqrt_floor(const Int& scaled, Index n) {
  return make_rational(Int(popcount(scaled)), Int(n));
}

// h_n at H_0..H_I.
std::vector<Rational> hybrid_h_values(const PerturbationPair& pair, Index n, Index i_max, const EvalContext& ctx) {
  std::vector<QuadraticSurd> points;
  points.reserve(i_max + 1);
  for (Index i = 0; i <= i_max; ++i) points.push_back(hybrid_point(pair, i, ctx.pin));
  const auto floors = batch_sqrt_floor(points, n, ctx);
  std::vector<Rational> out;
  out.reserve(floors.size());
  for (const auto& f : floors) out.push_back(h_from_sqrt_floor(f, n));
  return out;
}

Rational abs_max(const std::vector<DiffEntry>& entries, std::size_t begin, std::size_t end) {
  Rational best = 0;
  for (std::size_t e = begin; e < end; ++e) best = std::max<Rational>(best, abs(entries[e].value));
  return best;
}

}  // namespace

int PerturbationPair::dx(Index j) const {
  auto it = std::lower_bound(flips_.begin(), flips_.end(), j, [](const Flip& f, Index v) { return f.j < v; });
  return it != flips_.end() && it->j == j ? it->dx : 0;
}

PerturbationPair apply_x_flips(const QuadraticSurd& omega, std::vector<Flip> flips, const PinOptions& opts) {
  if (omega.is_rational()) throw Error(ErrorKind::RationalPoint, "omega must be irrational");
  require_unit_interval(omega, "omega", opts);
  std::sort(flips.begin(), flips.end(), [](const Flip& a, const Flip& b) { return a.j < b.j; });
  for (std::size_t e = 0; e < flips.size(); ++e) {
    if (flips[e].j == 0) throw Error(ErrorKind::InvalidArgument, "flip positions start at 1");
    if (flips[e].dx != 1 && flips[e].dx != -1) throw Error(ErrorKind::InvalidArgument, "flip direction must be +1 or -1");
    if (e > 0 && flips[e].j == flips[e - 1].j) {
      throw Error(ErrorKind::InconsistentFlip, "position " + std::to_string(flips[e].j) + " flipped twice");
    }
  }
  QuadraticSurd omega1 = omega;
  if (!flips.empty()) {
    const Index top = flips.back().j;
    const DyadicExpansion x = digits(omega, top, opts);
    Int shift = 0;
    for (const Flip& f : flips) {
      const int digit = x.at(f.j);
      if ((f.dx == 1 && digit != 0) || (f.dx == -1 && digit != 1)) {
        throw Error(ErrorKind::InconsistentFlip, "digit " + std::to_string(f.j) + " is " + std::to_string(digit) +
                                                     ", cannot apply " + (f.dx > 0 ? "+1" : "-1"));
      }
      shift += f.dx > 0 ? pow2(top - f.j) : Int(-pow2(top - f.j));
    }
    omega1 = add_dyadic(omega, shift, top);
  }
  require_unit_interval(omega1, "omega1", opts);
  QuadraticSurd nu = square_surd(omega);
  QuadraticSurd nu1 = square_surd(omega1);
  if (nu.is_rational() || nu1.is_rational()) {
    throw Error(ErrorKind::RationalPoint, "squared point is rational: " + nu1.str());
  }
  return PerturbationPair(omega, std::move(flips), std::move(omega1), std::move(nu), std::move(nu1));
}

Flip toggle_flip(const QuadraticSurd& omega, Index j, const PinOptions& opts) {
  if (j == 0) throw Error(ErrorKind::InvalidArgument, "flip positions start at 1");
  return Flip{j, digits(omega, j, opts).at(j) == 0 ? 1 : -1};
}

std::vector<DeltaU> delta_u(const PerturbationPair& pair, Index i_max, const PinOptions& opts) {
  const DyadicExpansion u = digits(pair.nu(), i_max, opts);
  const DyadicExpansion u1 = digits(pair.nu1(), i_max, opts);
  std::vector<DeltaU> out;
  out.reserve(i_max);
  for (Index i = 1; i <= i_max; ++i) out.push_back(DeltaU{i, int(u1.at(i)) - int(u.at(i))});
  return out;
}

QuadraticSurd hybrid_point(const PerturbationPair& pair, Index i, const PinOptions& opts) {
  return splice_prefix(pair.nu1(), pair.nu(), i, opts);
}

QuadraticSurd x_hybrid_point(const PerturbationPair& pair, Index j, const PinOptions& opts) {
  return splice_prefix(pair.omega1(), pair.omega(), j, opts);
}

Rational eval_h_n(const QuadraticSurd& point, Index n, const PinOptions& opts) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "h_n needs n >= 1");
  require_unit_interval(point, "point", opts);
  return h_from_sqrt_floor(pinned_floor_sqrt(point, n, opts).value(), n);
}

Rational partial_diff_h(const PerturbationPair& pair, Index n, Index i, const PinOptions& opts) {
  if (i == 0) throw Error(ErrorKind::InvalidArgument, "coordinates start at 1");
  const auto du = delta_u(pair, i, opts).back().du;
  if (du == 0) return 0;
  return eval_h_n(hybrid_point(pair, i - 1, opts), n, opts) - eval_h_n(hybrid_point(pair, i, opts), n, opts);
}

Rational partial_dU_dX(const PerturbationPair& pair, Index i, Index j, const PinOptions& opts) {
  if (i == 0 || j == 0) throw Error(ErrorKind::InvalidArgument, "coordinates start at 1");
  const int dx = pair.dx(j);
  if (dx == 0) return 0;
  auto u_digit = [&](const QuadraticSurd& g) {
    return int(digits(square_surd(g), i, opts).at(i));
  };
  const int diff = u_digit(x_hybrid_point(pair, j - 1, opts)) - u_digit(x_hybrid_point(pair, j, opts));
  return Rational(diff * dx);  // dx = +-1, so dividing equals multiplying
}

std::vector<QuadraticSurd> tail_variants(const QuadraticSurd& nu, Index k, const PinOptions& opts) {
  if (k > kMaxVariantBits) {
    throw Error(ErrorKind::InvalidArgument, "k = " + std::to_string(k) + " exceeds " + std::to_string(kMaxVariantBits));
  }
  require_unit_interval(nu, "nu", opts);
  const Int prefix = pinned_floor(nu, k, opts);
  std::vector<QuadraticSurd> out;
  out.reserve(std::size_t{1} << k);
  for (unsigned long b = 0; b < (1ul << k); ++b) out.push_back(add_dyadic(nu, Int(b) - prefix, k));
  return out;
}

Rational frozen_prefix_delta(const PerturbationPair& pair, Index k, Index n, const PinOptions& opts) {
  return eval_h_n(hybrid_point(pair, k, opts), n, opts) - eval_h_n(pair.nu(), n, opts);
}

Index default_i_max(Index n, Index predicted_support) {
  return std::min<Index>(kIMaxCeiling, 4 * std::max(n, predicted_support));
}

bool DifferenceReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

DifferenceReport total_diff_check(const PerturbationPair& pair, Index n, Index i_max, const EvalContext& ctx) {
  DifferenceReport rep;
  rep.op = "totaldiff";
  rep.convention = kHybridConvention;
  rep.n = n;

  const auto du = delta_u(pair, i_max, ctx.pin);
  const auto hv = hybrid_h_values(pair, n, i_max, ctx);
  const Rational h_nu = eval_h_n(pair.nu(), n, ctx.pin);
  rep.total = hv[0] - h_nu;

  rep.partial_sums.push_back(0);
  bool telescopes = true;
  Index observed = 0;
  for (Index i = 1; i <= i_max; ++i) {
    const int d = du[i - 1].du;
    Rational value = d == 0 ? Rational(0) : Rational(hv[i - 1] - hv[i]);
    if (value != 0) observed = i;
    rep.partial_sums.push_back(rep.partial_sums.back() + value);
    telescopes = telescopes && rep.partial_sums.back() == hv[0] - hv[i];
    rep.entries.push_back(DiffEntry{i, d, std::move(value), std::nullopt});
  }
  rep.support_bound = observed;
  rep.predicted_support = compute_Mn(pair.nu(), n, default_mn_cap(n), ctx.pin);

  Rational x_side = 0;
  for (const Flip& f : pair.flips()) {
    if (f.j <= n) x_side += f.dx;
  }
  x_side /= n;

  rep.checks.push_back({"telescoping", telescopes});
  rep.checks.push_back({"support_within_prediction", observed <= *rep.predicted_support});
  rep.checks.push_back({"x_linearity", rep.total == x_side});

  rep.claim = Claim{"finite_total_difference", rep.total};
  rep.computed = rep.partial_sums.back();
  rep.verdict = rep.computed == rep.claim->expected ? "match" : "deviation";
  rep.trivial = pair.flips().empty();
  return rep;
}

DifferenceReport chain_rule_check(const PerturbationPair& pair, Index n, Index j, Index i_max,
                                  const EvalContext& ctx) {
  if (j == 0) throw Error(ErrorKind::InvalidArgument, "coordinates start at 1");
  DifferenceReport rep;
  rep.op = "chain";
  rep.convention = kHybridConvention;
  rep.n = n;
  rep.j = j;
  const int dx = pair.dx(j);
  rep.dx = dx;
  rep.trivial = dx == 0;
  rep.claim = Claim{"chain_rule_sum", j <= n ? make_rational(Int(1), Int(n)) : Rational(0)};

  const auto du = delta_u(pair, i_max, ctx.pin);
  const auto hv = hybrid_h_values(pair, n, i_max, ctx);
  rep.total = hv[0] - eval_h_n(pair.nu(), n, ctx.pin);

  // U digits of G_{j-1}^2 and G_j^2, and of every G along the flip set for
  // the X-space telescoping check.
  DyadicExpansion before;
  DyadicExpansion after;
  if (dx != 0) {
    before = digits(square_surd(x_hybrid_point(pair, j - 1, ctx.pin)), i_max, ctx.pin);
    after = digits(square_surd(x_hybrid_point(pair, j, ctx.pin)), i_max, ctx.pin);
  }

  rep.partial_sums.push_back(0);
  Index observed = 0;
  for (Index i = 1; i <= i_max; ++i) {
    const int d = du[i - 1].du;
    Rational quotient = d == 0 ? Rational(0) : Rational((hv[i - 1] - hv[i]) / d);
    Rational factor = dx == 0 ? Rational(0) : Rational((int(before.at(i)) - int(after.at(i))) * dx);
    const Rational term = quotient * factor;
    if (term != 0) observed = i;
    rep.partial_sums.push_back(rep.partial_sums.back() + term);
    rep.entries.push_back(DiffEntry{i, d, std::move(quotient), std::move(factor)});
  }
  rep.support_bound = observed;
  rep.predicted_support = compute_Mn(pair.nu(), n, default_mn_cap(n), ctx.pin);

  // X-space total difference: sum_j dU_{i,j} = dU_i over the whole flip set.
  bool x_telescopes = true;
  if (!pair.flips().empty()) {
    const Index top = pair.flips().back().j;
    const DyadicExpansion first = digits(square_surd(x_hybrid_point(pair, 0, ctx.pin)), i_max, ctx.pin);
    const DyadicExpansion last = digits(square_surd(x_hybrid_point(pair, top, ctx.pin)), i_max, ctx.pin);
    for (Index i = 1; i <= i_max; ++i) {
      x_telescopes = x_telescopes && int(first.at(i)) - int(last.at(i)) == du[i - 1].du;
    }
  }
  rep.checks.push_back({"x_space_telescoping", x_telescopes});

  rep.computed = rep.partial_sums.back();
  rep.verdict = rep.computed == rep.claim->expected ? "match" : "deviation";
  return rep;
}

DifferenceReport decay_series(const PerturbationPair& pair, Index k, std::vector<Index> n_list,
                              const EvalContext& ctx) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "coordinates start at 1");
  if (n_list.empty()) throw Error(ErrorKind::InvalidArgument, "empty n list");
  if (std::find(n_list.begin(), n_list.end(), Index{0}) != n_list.end()) {
    throw Error(ErrorKind::InvalidArgument, "h_n needs n >= 1");
  }
  DifferenceReport rep;
  rep.op = "decay";
  rep.convention = kHybridConvention;
  rep.k = k;
  rep.n_list = n_list;
  const int d = delta_u(pair, k, ctx.pin).back().du;
  rep.trivial = d == 0;

  const Index top = *std::max_element(n_list.begin(), n_list.end());
  std::vector<Int> floors(2, Int(0));
  if (d != 0) {
    const std::vector<QuadraticSurd> points{hybrid_point(pair, k - 1, ctx.pin), hybrid_point(pair, k, ctx.pin)};
    floors = batch_sqrt_floor(points, top, ctx);
  }
  for (Index n : n_list) {
    Rational value = 0;
    if (d != 0) {
      value = h_from_sqrt_floor(floor_shift_right(floors[0], top - n), n) -
              h_from_sqrt_floor(floor_shift_right(floors[1], top - n), n);
    }
    rep.entries.push_back(DiffEntry{n, d, std::move(value), std::nullopt});
  }
  const std::size_t half = rep.entries.size() / 2;
  rep.head_max = abs_max(rep.entries, 0, half);
  rep.tail_max = abs_max(rep.entries, half, rep.entries.size());
  rep.claim = Claim{"partial_difference_limit_zero", Rational(0)};
  rep.computed = rep.entries.back().value;
  rep.verdict = *rep.tail_max <= *rep.head_max ? "match" : "deviation";
  return rep;
}

DifferenceReport invariance_check(const QuadraticSurd& nu, const PerturbationPair& pair, Index k, Index n,
                                  const EvalContext& ctx) {
  DifferenceReport rep;
  rep.op = "invariance";
  rep.convention = kHybridConvention;
  rep.n = n;
  rep.k = k;

  const auto variants = tail_variants(pair.nu1(), k, ctx.pin);
  const auto floors = batch_sqrt_floor(variants, n, ctx);
  const Rational h_nu = eval_h_n(nu, n, ctx.pin);
  rep.total = eval_h_n(pair.nu1(), n, ctx.pin) - h_nu;

  Rational lo;
  Rational hi;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    Rational h = h_from_sqrt_floor(floors[v], n);
    Rational delta = h - h_nu;
    if (v == 0 || delta < lo) lo = delta;
    if (v == 0 || delta > hi) hi = delta;
    const std::string pattern = k == 0 ? std::string() : expansion_from_int(Int(static_cast<unsigned long>(v)), k,
                                                                            Exactness::TruncatedIrrational)
                                                             .str();
    rep.variants.push_back(VariantEntry{pattern, std::move(h), std::move(delta)});
  }

  if (k >= 1) {
    std::vector<Index> bounds(variants.size());
    for_each_index(variants.size(), ctx.policy, [&](std::size_t v) {
      bounds[v] = compute_Nr_of_sqrt(variants[v], k, default_nr_cap(k), ctx.pin);
    });
    rep.n_max = *std::max_element(bounds.begin(), bounds.end());
  }

  rep.claim = Claim{"prefix_invariance", Rational(0)};
  rep.computed = hi - lo;
  rep.verdict = rep.computed == 0 ? "match" : "deviation";
  rep.trivial = k == 0;
  return rep;
}

}  // namespace surdbits
