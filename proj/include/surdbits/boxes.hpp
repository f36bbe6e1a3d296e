#pragma once

// r boxes [k 2^-r, (k+1) 2^-r) and the prefix-determination searches
// between the digits of a point and the digits of its square.

#include <optional>
#include <span>

#include "surdbits/bigint.hpp"
#include "surdbits/expansion.hpp"
#include "surdbits/pinned.hpp"
#include "surdbits/surd.hpp"

namespace surdbits {

struct BoxIndex {
  Index r = 0;
  Int k;  ///< may equal 2^r for the endpoint value 1

  friend bool operator==(const BoxIndex&, const BoxIndex&) = default;
};

struct PrefixDetermination {
  bool determined = false;
  DyadicExpansion x_prefix;  ///< n digits, empty unless determined
  Index witness_m = 0;
};

inline Index default_nr_cap(Index r) { return 64 * r + 64; }
inline Index default_mn_cap(Index n) { return 64 * n + 64; }

BoxIndex box_index(const QuadraticSurd& x, Index r, const PinOptions& opts = {});

/// Box of the exact rational a / 2^len at resolution r.
BoxIndex box_index_of_dyadic(const Int& a, Index len, Index r);

bool same_box(const QuadraticSurd& a, const QuadraticSurd& b, Index r, const PinOptions& opts = {});

/// Smallest n > 1 such that w^2 and (w + 2^-(n-1))^2 share an r box, where w
/// is the (n-1)-digit truncation of omega. SearchExhausted past `cap`.
Index compute_Nr(const QuadraticSurd& omega, Index r, Index cap, const PinOptions& opts = {});

/// compute_Nr for the point sqrt(nu), whose digits come from pinned_floor_sqrt.
Index compute_Nr_of_sqrt(const QuadraticSurd& nu, Index r, Index cap, const PinOptions& opts = {});

/// Smallest m such that sqrt maps [.u1..um, .u1..um + 2^-m] into one closed
/// n box. SearchExhausted past `cap`.
Index compute_Mn(const QuadraticSurd& nu, Index n, Index cap, const PinOptions& opts = {});

/// The containment test of compute_Mn applied to a given U prefix.
PrefixDetermination x_prefix_from_u_prefix(std::span<const Bit> u_prefix, Index n);

/// The n box c with sqrt([a/2^m, (a+1)/2^m]) inside [c/2^n, (c+1)/2^n], if any.
std::optional<Int> sqrt_interval_box(const Int& a, Index m, Index n);

}  // namespace surdbits
