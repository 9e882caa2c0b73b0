#include "oddres/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "oddres/parallel.hpp"

namespace oddres {

namespace {

// L_n(x) and L_{n-1}(x) by upward recurrence.
template <class T>
void laguerre_pair(int n, const T& x, T& ln, T& lnm1) {
  T p0(1), p1 = T(1) - x;
  if (n == 0) { ln = p0; lnm1 = T(0); return; }
  for (int m = 1; m < n; ++m) {
    T p2 = ((T(2 * m + 1) - x) * p1 - T(m) * p0) / T(m + 1);
    p0 = p1;
    p1 = p2;
  }
  ln = p1;
  lnm1 = p0;
}

double newton_double(int n, double z) {
  for (int it = 0; it < 64; ++it) {
    double ln, lnm1;
    laguerre_pair(n, z, ln, lnm1);
    double dl = n * (ln - lnm1) / z;  // L_n'(x) = n (L_n - L_{n-1}) / x
    double step = ln / dl;
    z -= step;
    if (std::abs(step) < 1e-14 * z) break;
  }
  return z;
}

}  // namespace

GaussLaguerre GaussLaguerre::build(int n, int jobs) {
  if (n < 1) throw std::invalid_argument("GaussLaguerre: need n >= 1");
  precision::ensure_thread();

  // Seeds: standard guesses marching from the smallest root.
  std::vector<double> seed(static_cast<std::size_t>(n));
  double z = 0;
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      z = 3.0 / (1.0 + 2.4 * n);
    else if (i == 1)
      z += 15.0 / (1.0 + 2.5 * n);
    else
      z += ((1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1))) * (z - seed[static_cast<std::size_t>(i - 2)]);
    z = newton_double(n, z);
    seed[static_cast<std::size_t>(i)] = z;
  }

  GaussLaguerre out;
  out.nodes.assign(static_cast<std::size_t>(n), Real(0));
  out.weights.assign(static_cast<std::size_t>(n), Real(0));

  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t i) {
    Real x(seed[i]);
    for (int it = 0; it < 40; ++it) {
      Real ln(0), lnm1(0);
      laguerre_pair(n, x, ln, lnm1);
      Real dl = Real(n) * (ln - lnm1) / x;
      Real step = ln / dl;
      x -= step;
      if (abs(step) < x * pow(Real(2), -static_cast<int>(precision::bits()) + 8)) break;
    }
    // w_i = x_i / ((n+1) L_{n+1}(x_i))^2 for the weight-function convention
    // above (alpha = 0).
    Real lnp1(0), ln(0);
    laguerre_pair(n + 1, x, lnp1, ln);
    Real d = Real(n + 1) * lnp1;
    out.nodes[i] = x;
    out.weights[i] = x / (d * d);
  });
  return out;
}

}  // namespace oddres
