#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oddres/geometry.hpp"

using namespace oddres;

namespace {
constexpr double pi = 3.141592653589793238462643383279502884;
}

TEST_CASE("parallelogram membership follows the two strict strip conditions") {
  // k = 1: need both theta + s and 5 theta + s in (0, pi).
  CHECK(in_parallelogram_P(pi / 2, 0.1, 1));
  CHECK(in_parallelogram_P(0.0, 0.3, 1));
  CHECK_FALSE(in_parallelogram_P(0.0, 0.0, 1));       // boundary: both sums zero
  CHECK_FALSE(in_parallelogram_P(pi, 0.0, 1));        // boundary: both sums pi
  CHECK_FALSE(in_parallelogram_P(0.0, 0.7, 1));       // 5 theta = 3.5 > pi
  CHECK_FALSE(in_parallelogram_P(-0.5, 0.1, 1));      // theta + s < 0
  CHECK_FALSE(in_parallelogram_P(3.0, 0.2, 1));       // 5 theta + s > pi

  // Larger k narrows the admissible theta range.
  CHECK(in_parallelogram_P(pi / 2, 0.1, 2));
  CHECK_FALSE(in_parallelogram_P(pi / 2, 0.4, 2));    // 7 theta + s > pi
}

TEST_CASE("theta choice centers the rotated phase and flags boundary rays") {
  ThetaChoice mid = choose_theta(pi / 2, 1);
  CHECK(mid.theta == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_FALSE(mid.flagged);

  ThetaChoice interior = choose_theta(1.0, 2);
  CHECK(interior.theta == doctest::Approx(-1.0 / 5 + pi / 10));
  CHECK_FALSE(interior.flagged);

  ThetaChoice plus = choose_theta(0.0, 1);
  CHECK(plus.flagged);
  CHECK(plus.theta == doctest::Approx(pi / 6 - 1e-3));
  CHECK(in_parallelogram_P(0.0, plus.theta, 1));

  ThetaChoice minus = choose_theta(pi, 1);
  CHECK(minus.flagged);
  CHECK(minus.theta == doctest::Approx(-pi / 6 + 1e-3));
  CHECK(in_parallelogram_P(pi, minus.theta, 1));
}

TEST_CASE("chosen theta is admissible across the open arc") {
  for (int k : {1, 2, 3})
    for (double s = 0.05; s < pi; s += 0.1) {
      ThetaChoice tc = choose_theta(s, k);
      CAPTURE(k);
      CAPTURE(s);
      CHECK_FALSE(tc.flagged);
      CHECK(in_parallelogram_P(s, tc.theta, k));
    }
}

TEST_CASE("sector membership is strict in both radius and angle") {
  RegionSpec spec;  // k = 1, delta = 0.1, B_delta = 0.1, R = 1
  CHECK(sector_membership({0.05, 0.0}, spec));
  CHECK(sector_membership({-0.05, 0.0}, spec));          // arg pi < 5pi/4 - delta
  CHECK(sector_membership(std::polar(0.05, -0.5), spec));
  CHECK_FALSE(sector_membership({0.0, 0.0}, spec));      // origin excluded
  CHECK_FALSE(sector_membership({0.2, 0.0}, spec));      // radius bound
  CHECK_FALSE(sector_membership({0.1, 0.0}, spec));      // radius is strict
  CHECK_FALSE(sector_membership(std::polar(0.05, -pi / 4 + 0.05), spec));  // below inset
  CHECK_FALSE(sector_membership(std::polar(0.05, -0.8), spec));

  RegionSpec wide;
  wide.k = 2;
  wide.delta = 0.1;
  wide.B_delta = 0.1;
  CHECK(sector_membership(std::polar(0.05, -0.8), wide));  // lower edge -3pi/4 + 0.1
}

TEST_CASE("Nevanlinna disks through the power map, both branch copies") {
  Rational q(1, 2);  // k = 1
  CHECK(nevanlinna_membership({0.25, 0.0}, q, 1.0, NevanlinnaVariant::upper));
  CHECK(nevanlinna_membership({-0.25, 0.0}, q, 1.0, NevanlinnaVariant::lower));
  // Re beta^-2 at arg pi/4 is zero: strictly outside the closed region is
  // false, the boundary >= keeps exact zero in only when 1/R <= 0 never holds.
  CHECK_FALSE(nevanlinna_membership(std::polar(0.25, pi / 4), q, 1.0, NevanlinnaVariant::upper));
  CHECK_FALSE(nevanlinna_membership(std::polar(0.25, pi / 2), q, 1.0, NevanlinnaVariant::upper));
  CHECK_FALSE(nevanlinna_membership({2.0, 0.0}, q, 1.0, NevanlinnaVariant::upper));  // Re = 1/4 < 1
  CHECK_FALSE(nevanlinna_membership({0.0, 0.0}, q, 1.0, NevanlinnaVariant::upper));

  // Radius scaling: beta = 2 enters once R >= 4.
  CHECK(nevanlinna_membership({2.0, 0.0}, q, 4.0, NevanlinnaVariant::upper));

  // The lower variant is the upper one pulled back through beta e^{-i pi}.
  std::complex<double> b = std::polar(0.1, 2.8);
  std::complex<double> rotated = std::polar(0.1, 2.8 - pi);
  CHECK(nevanlinna_membership(b, q, 1.0, NevanlinnaVariant::lower) ==
        nevanlinna_membership(rotated, q, 1.0, NevanlinnaVariant::upper));
}

TEST_CASE("region predicates reject degenerate parameters") {
  CHECK_THROWS_AS(in_parallelogram_P(0.1, 0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(choose_theta(0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(nevanlinna_membership({0.1, 0.0}, Rational(1, 2), -1.0,
                                        NevanlinnaVariant::upper),
                  std::invalid_argument);
  CHECK_THROWS_AS(nevanlinna_membership({0.1, 0.0}, Rational(-1, 2), 1.0,
                                        NevanlinnaVariant::upper),
                  std::invalid_argument);
}
