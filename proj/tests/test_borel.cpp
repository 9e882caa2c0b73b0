#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oddres/borel.hpp"
#include "oddres/pade.hpp"
#include "oddres/quadrature.hpp"
#include "oddres/rs_series.hpp"
#include "oddres/summation.hpp"
#include "test_support.hpp"

using namespace oddres;

namespace {

std::vector<Rational> geometric(int terms) {
  return std::vector<Rational>(static_cast<std::size_t>(terms), Rational(1));
}

std::vector<Rational> exponential(int terms) {
  std::vector<Rational> c(static_cast<std::size_t>(terms));
  Rational f(1);
  for (int s = 0; s < terms; ++s) {
    if (s > 0) f /= s;
    c[static_cast<std::size_t>(s)] = f;
  }
  return c;
}

std::vector<Rational> euler_alternating(int terms) {
  std::vector<Rational> c(static_cast<std::size_t>(terms));
  Rational f(1);
  for (int s = 0; s < terms; ++s) {
    if (s > 0) f *= -s;
    c[static_cast<std::size_t>(s)] = f;
  }
  return c;
}

}  // namespace

TEST_CASE("Leroy factor divides out an exact integer factorial") {
  RSExpansion e = rs_expand(OscillatorSpec(1, 0), 12);
  BorelSeries b = leroy_transform(e);
  Rational fact(1);
  for (int l = 0; 2 * l <= 12; ++l) {
    if (l > 0) fact *= l;  // Gamma(l + 1) for q = 1/2
    CHECK(b.b[static_cast<std::size_t>(2 * l)] == e.a[static_cast<std::size_t>(2 * l)] / fact);
  }

  RSExpansion e2 = rs_expand(OscillatorSpec(2, 0), 8);
  BorelSeries b2 = leroy_transform(e2);
  Rational fact2(1);
  for (int l = 0; 2 * l <= 8; ++l) {
    if (l > 0) fact2 *= Rational(3 * l) * (3 * l - 1) * (3 * l - 2);  // (3l)! step
    CHECK(b2.b[static_cast<std::size_t>(2 * l)] == e2.a[static_cast<std::size_t>(2 * l)] / fact2);
  }
}

TEST_CASE("even-series repack keeps exactly the even entries") {
  RSExpansion e = rs_expand(OscillatorSpec(1, 1), 10);
  BorelSeries b = leroy_transform(e);
  std::vector<Rational> c = b.even_coefficients();
  REQUIRE(c.size() == 6);
  for (std::size_t l = 0; l < c.size(); ++l) CHECK(c[l] == b.b[2 * l]);
}

TEST_CASE("diagonal approximant reproduces its Taylor data exactly") {
  RSExpansion e = rs_expand(OscillatorSpec(1, 0), 28);
  std::vector<Rational> c = leroy_transform(e).even_coefficients();
  PadeApproximant p = pade_construct(c, 7, 2);
  REQUIRE(p.order == 7);
  CHECK_FALSE(p.defect);
  CHECK(p.den.back() == Rational(1));
  std::vector<Rational> t = p.taylor(14);
  for (int s = 0; s <= 14; ++s)
    CHECK(t[static_cast<std::size_t>(s)] == c[static_cast<std::size_t>(s)]);
}

TEST_CASE("[1/1] of the geometric series is the function itself") {
  PadeApproximant p = pade_construct(geometric(3), 1);
  std::vector<Rational> t = p.taylor(9);
  for (const Rational& coeff : t) CHECK(coeff == Rational(1));
  REQUIRE(p.roots.size() == 1);
  CHECK(abs(p.roots[0] - CReal(Real(1), Real(0))) < Real("1e-40"));
  CHECK(abs(p.residue_z(p.roots[0]) - CReal(Real(-1), Real(0))) < Real("1e-40"));
}

TEST_CASE("singular Toeplitz block reduces the order and flags the defect") {
  // The geometric series is a [0/1] function; asking for [2/2] must detect
  // the singular block and come back with the reduced approximant.
  PadeApproximant p = pade_construct(geometric(5), 2);
  CHECK(p.defect);
  CHECK(p.order < 2);
  std::vector<Rational> t = p.taylor(6);
  for (const Rational& coeff : t) CHECK(coeff == Rational(1));
}

TEST_CASE("Euler series summed through the approximant matches direct quadrature") {
  // sum (-1)^s s! z^s at z = 1 has the Stieltjes value int e^-tau/(1+tau) dtau
  // = 0.5963...; the diagonal sequence closes in on it from above.
  double direct = romberg_laplace([](double tau) { return std::exp(-tau) / (1.0 + tau); });

  // Hand-solved [3/3]: numerator 1 + 11z + 26z^2 + 6z^3 over
  // 1 + 12z + 36z^2 + 24z^3, so the value at z = 1 is 44/73 exactly.
  PadeApproximant p3 = pade_construct(euler_alternating(7), 3);
  REQUIRE(p3.den.size() == 4);
  CHECK(p3.den.back() == Rational(1));
  CHECK(p3.den[0] == Rational(1, 24));
  CHECK(p3.num[3] == Rational(6, 24));
  CHECK(std::abs(static_cast<double>(p3.value_z(Real(1))) - 44.0 / 73.0) < 1e-15);

  PadeApproximant p6 = pade_construct(euler_alternating(13), 6);
  double via_pade = static_cast<double>(p6.value_z(Real(1)));
  CHECK(std::abs(via_pade - direct) < 2e-3);
  // Monotone squeeze from above, as a Stieltjes series demands.
  CHECK(static_cast<double>(p3.value_z(Real(1))) > via_pade);
  CHECK(via_pade > direct);
}

TEST_CASE("boundary value at a real pole is flagged, not silently wrong") {
  PadeApproximant p = pade_construct(geometric(3), 1);
  BoundaryValue bv = boundary_value(p, Real(1));
  CHECK(bv.pole_at_point);
  CHECK(bv.im_growth > 1.5);

  BoundaryValue regular = boundary_value(p, Real(1) / 2);
  CHECK_FALSE(regular.pole_at_point);
  // Richardson clears the delta and delta^2 terms; what survives is the
  // delta^3 tail of the finest rung.
  CHECK(abs(regular.value.re - Real(2)) < Real("1e-18"));
  CHECK(abs(regular.value.im) < Real("1e-13"));
}

TEST_CASE("principal-value Laplace kernel agrees with symmetric excision") {
  // PV int_0^inf e^-tau/(tau - 5) dtau, excised oracle with the analytic
  // correction for the removed window: PV of the window is
  // -2 e^-5 int_0^eps sinh(u)/u du = -2 e^-5 (eps + eps^3/18 + ...).
  Real closed = pv_laplace_pole(Real(5));
  double eps = 1e-2;
  double left = romberg([](double t) { return std::exp(-t) / (t - 5.0); }, 0.0, 5.0 - eps);
  double right = romberg([](double t) { return std::exp(-t) / (t - 5.0); }, 5.0 + eps, 60.0);
  double window = -2.0 * std::exp(-5.0) * (eps + eps * eps * eps / 18.0);
  CHECK(std::abs(static_cast<double>(closed) - (left + right + window)) < 1e-9);
  // Independent special-function route.
  CHECK(std::abs(static_cast<double>(closed) + std::exp(-5.0) * std::expint(5.0)) < 1e-14);
}

TEST_CASE("exponential integral matches the classical value at 1") {
  CHECK(std::abs(static_cast<double>(exp_integral_ei(Real(1))) - 1.8951178163559368) < 1e-14);
}

TEST_CASE("distributional sum of a one-pole model reproduces the excision oracle") {
  // B(t) = 1/(1-t), q = 1, beta = 0.2: the tau-plane pole sits at 5 with
  // residue -5, so f = PV int B(0.2 tau) e^-tau dtau = 5 e^-5 Ei(5) and
  // g = 5 pi e^-5.
  PadeApproximant p = pade_construct(geometric(3), 1);
  QuadratureSpec quad{96, 1};
  SumResult r = distributional_sum(p, Real(1) / 5, Rational(1), quad);

  double eps = 1e-2;
  auto integrand = [](double tau) { return std::exp(-tau) / (1.0 - 0.2 * tau); };
  // Window PV of -5 e^-tau/(tau-5): the residue -5 flips and scales the
  // -2 e^-5 (eps + eps^3/18) correction.
  double window = 10.0 * std::exp(-5.0) * (eps + eps * eps * eps / 18.0);
  double pv = romberg(integrand, 0.0, 5.0 - eps) + romberg(integrand, 5.0 + eps, 60.0) + window;
  CHECK(std::abs(static_cast<double>(r.f) - pv) < 1e-8);
  CHECK(std::abs(static_cast<double>(r.f) - 5.0 * std::exp(-5.0) * std::expint(5.0)) < 1e-13);
  CHECK(std::abs(static_cast<double>(r.g) - 5.0 * M_PI * std::exp(-5.0)) < 1e-13);
  CHECK(r.diag.real_pole_count == 1);
  CHECK(abs(r.diag.nearest_pole_t - Real(1)) < Real("1e-40"));
  // The pole term is the whole function here, so the de-poled quadrature
  // integrates an identical zero.
  CHECK(abs(r.diag.quad_error) < Real("1e-70"));
}

TEST_CASE("vanishing coupling recovers the zeroth coefficient") {
  RSExpansion e = rs_expand(OscillatorSpec(1, 0), 20);
  std::vector<Rational> c = leroy_transform(e).even_coefficients();
  PadeApproximant p = pade_construct(c, 5, 2);
  SumResult r = distributional_sum(p, Real("1e-6"), Rational(1, 2), QuadratureSpec{64, 1});
  CHECK(abs(r.f - Real(1)) < Real("1e-8"));
  CHECK(abs(r.g) < Real("1e-30"));
}

TEST_CASE("convergent control: ordinary sum inverts the Borel map on a geometric target") {
  // a_s = 1 with q = 1 Borel-transforms to e^t; summing at beta = 0.2i must
  // return 1/(1-beta) to high accuracy because everything converges.
  PadeApproximant p = pade_construct(exponential(17), 8);
  CReal beta(Real(0), Real(1) / 5);
  OrdinarySum r = ordinary_sum(p, beta, Rational(1), QuadratureSpec{80, 1});
  CReal expected = CReal(Real(1), Real(0)) / (CReal(Real(1), Real(0)) - beta);
  CHECK(abs(r.value - expected) < Real("1e-10"));
  CHECK_FALSE(r.low_confidence);
}

TEST_CASE("ordinary sum refuses rays outside the upper half plane") {
  PadeApproximant p = pade_construct(exponential(9), 4);
  CHECK_THROWS_AS(ordinary_sum(p, CReal(Real(1), Real(0)), Rational(1), QuadratureSpec{32, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ordinary_sum(p, CReal(Real(-1), Real(-1)), Rational(1), QuadratureSpec{32, 1}),
                  std::invalid_argument);
}

TEST_CASE("Gauss-Laguerre rule integrates monomials to exact factorials") {
  GaussLaguerre gl = GaussLaguerre::build(64);
  REQUIRE(gl.nodes.size() == 64);
  Real fact(1);
  for (int m = 0; m <= 12; ++m) {
    if (m > 0) fact *= m;
    Real acc(0);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
      acc += gl.weights[i] * pow(gl.nodes[i], m);
    CHECK(abs(acc - fact) / fact < Real("1e-60"));
  }
}

TEST_CASE("quadrature nodes are positive, sorted, with positive weights") {
  GaussLaguerre gl = GaussLaguerre::build(48);
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    CHECK(gl.nodes[i] > 0);
    CHECK(gl.weights[i] > 0);
    if (i > 0) CHECK(gl.nodes[i] > gl.nodes[i - 1]);
  }
}

TEST_CASE("generic Leroy transform matches the rational one on the oscillator series") {
  RSExpansion e = rs_expand(OscillatorSpec(1, 0), 10);
  std::vector<Real> as;
  for (const Rational& a : e.a) as.push_back(to_real(a));
  std::vector<Real> bs = leroy_transform_generic(as, Real(1) / 2);
  BorelSeries b = leroy_transform(e);
  for (std::size_t s = 0; s < bs.size(); ++s)
    CHECK(abs(bs[s] - to_real(b.b[s])) < Real("1e-70") * (1 + abs(to_real(b.b[s]))));
}
