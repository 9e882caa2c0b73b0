#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddres/band_matrix.hpp"
#include "oddres/rs_series.hpp"

using namespace oddres;

TEST_CASE("scaled position matrix carries the similarity-transformed ladder entries") {
  BandMatrixRational x = scaled_position_matrix(6);
  for (std::size_t m = 0; m < 6; ++m) {
    for (std::size_t c = 0; c < 6; ++c) {
      if (c + 1 == m)
        CHECK(x(m, c) == Rational(1));
      else if (c == m + 1)
        CHECK(x(m, c) == Rational(static_cast<long>(m) + 1, 2));
      else
        CHECK(x(m, c) == Rational(0));
    }
  }
}

TEST_CASE("band product is exact: entries of x^3 against hand values") {
  // In the scaled basis the symmetric entry <m|x^p|n> gamma_n/gamma_m shows
  // up; <0|x^3|1> = 3/(2 sqrt 2) maps to 3/4 here, <1|x^3|0> to 3/2.
  BandMatrixRational x3 = potential_matrix(1, 8);
  CHECK(x3(0, 1) == Rational(3, 4));
  CHECK(x3(1, 0) == Rational(3, 2));
  CHECK(x3(0, 3) == Rational(3, 4));  // single path (1/2)(1)(3/2)
  CHECK(x3(3, 0) == Rational(1));     // single path of unit subdiagonal steps
  CHECK(x3(0, 0) == Rational(0));
  CHECK(x3(2, 2) == Rational(0));
}

TEST_CASE("x^p in the scaled basis satisfies the exact symmetry identity") {
  // entry(m,n) * (m!/n!) * 2^(n-m) == entry(n,m): the band power must agree
  // with its own transpose after undoing the basis scaling.
  for (int k : {1, 2}) {
    BandMatrixRational xp = potential_matrix(k, 12);
    for (std::size_t m = 0; m < 12; ++m)
      for (std::size_t n = 0; n < m; ++n) {
        Rational lhs = xp(m, n) * Rational(factorial_int(static_cast<unsigned>(m)),
                                           factorial_int(static_cast<unsigned>(n)));
        std::size_t d = m - n;
        lhs /= Rational(BigInt(1) << d);
        CHECK(lhs == xp(n, m));
      }
  }
}

TEST_CASE("second-order coefficient matches the ladder-operator oracle") {
  for (int k = 1; k <= 3; ++k)
    for (int j = 0; j <= 3; ++j) {
      OscillatorSpec spec(k, j);
      RSExpansion e = rs_expand(spec, 2);
      CAPTURE(k);
      CAPTURE(j);
      CHECK(e.a[2] == second_order_oracle(spec));
    }
}

TEST_CASE("frozen second-order values for the cubic") {
  CHECK(rs_expand(OscillatorSpec(1, 0), 2).a[2] == Rational(-11, 16));
  CHECK(rs_expand(OscillatorSpec(1, 1), 2).a[2] == Rational(-71, 16));
}

TEST_CASE("zeroth order is the unperturbed level, first order vanishes") {
  for (int k : {1, 2})
    for (int j : {0, 1, 4}) {
      RSExpansion e = rs_expand(OscillatorSpec(k, j), 3);
      CHECK(e.a[0] == Rational(2 * j + 1));
      CHECK(e.a[1] == Rational(0));
      CHECK(e.a[3] == Rational(0));
    }
}

TEST_CASE("odd orders vanish identically through S = 20") {
  RSExpansion e = rs_expand(OscillatorSpec(2, 1), 20);
  for (int s = 1; s <= 20; s += 2) CHECK(e.a[static_cast<std::size_t>(s)] == Rational(0));
}

TEST_CASE("even orders are invariant under flipping the coupling sign") {
  // With V -> -V every odd-order term flips and every even-order term stays;
  // since the odd ones vanish, the expansions must agree exactly.
  OscillatorSpec spec(1, 0);
  BandMatrixRational v = potential_matrix(spec.k, static_cast<std::size_t>(spec.j) +
                                                      static_cast<std::size_t>(spec.power()) * 10 + 1);
  BandMatrixRational vneg = v;
  vneg.negate();
  RSExpansion plus = rs_expand_with_potential(spec, 10, v);
  RSExpansion minus = rs_expand_with_potential(spec, 10, vneg);
  for (int s = 0; s <= 10; ++s)
    CHECK(plus.a[static_cast<std::size_t>(s)] == minus.a[static_cast<std::size_t>(s)]);
}

TEST_CASE("coefficients are independent of basis headroom beyond the support bound") {
  // The order-s correction lives on indices <= j + (2k+1)s, so enlarging the
  // basis past j + (2k+1)S + 1 must not move any coefficient.
  for (int k : {1, 2})
    for (int j : {0, 2}) {
      OscillatorSpec spec(k, j);
      const int order = 8;
      std::size_t tight = static_cast<std::size_t>(j + spec.power() * order + 1);
      RSExpansion a = rs_expand_with_potential(spec, order, potential_matrix(k, tight));
      RSExpansion b = rs_expand_with_potential(spec, order, potential_matrix(k, tight + 7));
      for (int s = 0; s <= order; ++s)
        CHECK(a.a[static_cast<std::size_t>(s)] == b.a[static_cast<std::size_t>(s)]);
    }
}

TEST_CASE("magnitudes grow factorially: Borel-transformed tail ratios stay bounded") {
  // After dividing a_2l by l! (the order-1/2 Leroy factor for k = 1) the tail
  // must behave geometrically; successive root tests approach the reciprocal
  // of a finite radius rather than running off to zero or infinity.
  RSExpansion e = rs_expand(OscillatorSpec(1, 0), 24);
  Rational fact(1);
  std::vector<Rational> borel(13);
  for (int l = 0; l <= 12; ++l) {
    if (l > 0) fact *= l;
    borel[static_cast<std::size_t>(l)] = e.a[static_cast<std::size_t>(2 * l)] / fact;
  }
  for (int l = 6; l + 1 <= 12; ++l) {
    Rational ratio = abs(borel[static_cast<std::size_t>(l + 1)]) /
                     abs(borel[static_cast<std::size_t>(l)]);
    CHECK(ratio > Rational(1));
    CHECK(ratio < Rational(8));
  }
}

TEST_CASE("apply agrees with dense row sums") {
  BandMatrixRational x = scaled_position_matrix(5);
  std::vector<Rational> u{Rational(1), Rational(-2), Rational(3, 2), Rational(0), Rational(5)};
  std::vector<Rational> y = x.apply(u);
  for (std::size_t r = 0; r < 5; ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < 5; ++c) acc += x(r, c) * u[c];
    CHECK(y[r] == acc);
  }
}
