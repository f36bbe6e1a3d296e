#include "doctest.h"

#include <vector>

#include "oracle.hpp"
#include "surdbits/error.hpp"
#include "surdbits/expansion.hpp"

using namespace surdbits;

namespace {
QuadraticSurd surd(long p, long q, unsigned long s, std::uint64_t t) { return make_surd(Int(p), Int(q), Nat(s), t); }
const QuadraticSurd kLambda2 = lambda_of(Nat(2));
}  // namespace

TEST_CASE("digits examples") {
  const DyadicExpansion a = digits(kLambda2, 8);
  CHECK(a.str() == "01101010");
  CHECK(a.exactness() == Exactness::TruncatedIrrational);
  const DyadicExpansion b = digits(surd(1, 0, 2, 2), 8);
  CHECK(b.str() == "01000000");
  CHECK(b.exactness() == Exactness::TerminatingDyadic);
  CHECK(digits(surd(3, -2, 2, 0), 8).str() == "00101011");
  CHECK(digits(kLambda2, 0).length() == 0);
}

TEST_CASE("digits rejects values outside [0, 1)") {
  CHECK_THROWS_AS(digits(surd(0, 1, 2, 0), 8), Error);    // sqrt 2
  CHECK_THROWS_AS(digits(surd(1, -1, 2, 0), 8), Error);   // 1 - sqrt 2
  CHECK_THROWS_AS(digits(surd(1, 0, 2, 0), 8), Error);    // exactly 1
  CHECK_NOTHROW(digits(surd(0, 0, 2, 0), 8));
}

TEST_CASE("digit formula and prefix stability") {
  for (unsigned long s : {2ul, 3ul, 5ul, 7ul, 13ul}) {
    const QuadraticSurd x = lambda_of(Nat(s));
    const DyadicExpansion longer = digits(x, 300);
    const DyadicExpansion shorter = digits(x, 120);
    for (Index j = 1; j <= 120; ++j) CHECK(shorter.at(j) == longer.at(j));
    for (Index j = 1; j <= 300; j += 7) {
      CHECK(int(longer.at(j)) == int(oracle::floor_scaled(x, j).get_ui() & 1ul));
    }
    CHECK(longer.str() == oracle::digit_string(x, 300));
  }
}

TEST_CASE("sqrt digits") {
  CHECK(sqrt_digits(surd(3, -2, 2, 0), 8).str() == "01101010");
  const DyadicExpansion quarter = sqrt_digits(surd(1, 0, 2, 2), 4);
  CHECK(quarter.str() == "1000");
  CHECK(quarter.exactness() == Exactness::TerminatingDyadic);
  CHECK(sqrt_digits(surd(1, 0, 2, 1), 4).exactness() == Exactness::TruncatedIrrational);
}

TEST_CASE("complement") {
  const DyadicExpansion e = DyadicExpansion::from_string("01101010");
  CHECK(complement_digits(e).str() == "10010101");
  CHECK(complement_digits(DyadicExpansion::from_string("0000")).str() == "1111");
  CHECK(complement_digits(complement_digits(e)) == e);
  CHECK_THROWS_AS(DyadicExpansion::from_string("0120"), Error);
}

TEST_CASE("freq_series") {
  const DyadicExpansion e = digits(kLambda2, 8);
  const std::vector<Index> at8{8};
  const auto p8 = freq_series(e, at8);
  CHECK(p8[0].ones == 4);
  CHECK(p8[0].f == Rational(1, 2));
  const std::vector<Index> at1{1};
  CHECK(freq_series(e, at1)[0].f == 0);
  const std::vector<Index> at2{2};
  CHECK(freq_series(DyadicExpansion::from_string("11"), at2)[0].f == 1);
  const std::vector<Index> bad{9};
  CHECK_THROWS_AS(freq_series(e, bad), Error);
  const std::vector<Index> zero{0};
  CHECK_THROWS_AS(freq_series(e, zero), Error);
  CHECK(csv_row(p8[0]) == "8,4,1,2");
}

TEST_CASE("f + g = 1 for every frequency point") {
  const DyadicExpansion e = digits(lambda_of(Nat(7)), 500);
  std::vector<Index> all;
  for (Index n = 1; n <= 500; ++n) all.push_back(n);
  for (const auto& p : freq_series(e, all)) {
    CHECK(p.f + p.zeros_fraction() == 1);
    CHECK(p.f >= 0);
    CHECK(p.f <= 1);
  }
}

TEST_CASE("first_tail_agreement") {
  const LemmaPoints pts = build_lemma_points(Nat(2), 2);
  const auto a = digits(square_surd(pts.omega1), 64);
  const auto b = digits(square_surd(pts.omega2), 64);
  CHECK(first_tail_agreement(a, b) == Index{8});
  CHECK(first_tail_agreement(a, a) == Index{1});
  const auto lam = digits(kLambda2, 64);
  CHECK_FALSE(first_tail_agreement(lam, complement_digits(lam)).has_value());
  CHECK_THROWS_AS(first_tail_agreement(lam, digits(kLambda2, 63)), Error);
}

TEST_CASE("complement duality of lambda and 1 - lambda") {
  for (unsigned long s : {2ul, 3ul, 5ul, 11ul}) {
    const QuadraticSurd lam = lambda_of(Nat(s));
    const auto a = digits(lam, 512);
    const auto b = digits(one_minus(lam), 512);
    CHECK(b == complement_digits(a));
  }
}
