#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oddres/precision.hpp"

namespace oddres {

// Horner, ascending coefficients c[0] + c[1] x + ...
template <class C, class X>
X eval_poly(const std::vector<C>& c, const X& x) {
  X acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += X(*it);
  }
  return acc;
}

template <class C, class X>
X eval_poly_derivative(const std::vector<C>& c, const X& x) {
  X acc{};
  for (std::size_t i = c.size(); i-- > 1;) {
    acc *= x;
    acc += X(static_cast<unsigned>(i)) * X(c[i]);
  }
  return acc;
}

// Working epsilon probed at runtime so the same code serves double and
// variable-precision mpfr operands.
template <class T>
T runtime_epsilon() {
  T eps(1);
  while (T(1) + eps / 2 != T(1)) eps /= 2;
  return eps;
}

// Aberth-Ehrlich simultaneous iteration for all roots of a polynomial with
// real coefficients (ascending order, nonzero leading coefficient). Good to
// near working precision for the well-separated low-degree denominators that
// show up here; no deflation, so accuracy does not degrade with ordering.
template <class T>
std::vector<Cx<T>> aberth_roots(const std::vector<T>& coeffs, int max_iter = 300) {
  using std::acos;
  using std::cos;
  using std::sin;
  if (coeffs.size() < 2) return {};
  if (coeffs.back() == 0) throw std::invalid_argument("aberth_roots: leading coefficient is zero");
  const std::size_t deg = coeffs.size() - 1;

  // Cauchy bound sets the start circle; slightly irrational angle spacing
  // avoids symmetric stalemates.
  T maxr(0);
  for (std::size_t i = 0; i < deg; ++i) {
    T m = abs(Cx<T>(coeffs[i] / coeffs.back()));
    if (m > maxr) maxr = m;
  }
  T radius = T(1) + maxr;
  const T pi = acos(T(-1));
  std::vector<Cx<T>> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    T phi = 2 * pi * (T(static_cast<unsigned>(i)) + T(35) / 100) / T(static_cast<unsigned>(deg));
    z[i] = radius * Cx<T>(cos(phi), sin(phi));
  }

  const T tol = runtime_epsilon<T>() * 100;
  for (int iter = 0; iter < max_iter; ++iter) {
    T worst(0);
    for (std::size_t i = 0; i < deg; ++i) {
      Cx<T> p = eval_poly(coeffs, z[i]);
      Cx<T> dp = eval_poly_derivative(coeffs, z[i]);
      if (abs(dp) == 0) {
        z[i] += Cx<T>(tol, tol);
        worst = radius;
        continue;
      }
      Cx<T> newton = p / dp;
      Cx<T> repel{};
      for (std::size_t m = 0; m < deg; ++m) {
        if (m == i) continue;
        Cx<T> d = z[i] - z[m];
        if (abs(d) == 0) d = Cx<T>(tol, T(0));
        repel += Cx<T>(T(1), T(0)) / d;
      }
      Cx<T> denom = Cx<T>(T(1), T(0)) - newton * repel;
      Cx<T> step = (abs(denom) == 0) ? newton : newton / denom;
      z[i] -= step;
      T s = abs(step);
      if (s > worst) worst = s;
    }
    if (worst < tol * radius) break;
  }
  return z;
}

}  // namespace oddres
