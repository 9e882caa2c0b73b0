#pragma once

#include <cmath>
#include <functional>
#include <vector>

// Romberg integration on [a, b] in double precision. Deliberately independent
// of the library quadrature so the two can cross-check each other.
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      int levels = 18, double tol = 1e-12) {
  std::vector<double> row(static_cast<std::size_t>(levels));
  double h = b - a;
  row[0] = 0.5 * h * (f(a) + f(b));
  for (int i = 1; i < levels; ++i) {
    h *= 0.5;
    long pts = 1L << (i - 1);
    double s = 0;
    for (long p = 0; p < pts; ++p) s += f(a + (2 * p + 1) * h);
    std::vector<double> next(static_cast<std::size_t>(i) + 1);
    next[0] = 0.5 * row[0] + h * s;
    double pow4 = 1;
    for (int m = 1; m <= i; ++m) {
      pow4 *= 4;
      next[static_cast<std::size_t>(m)] =
          (pow4 * next[static_cast<std::size_t>(m - 1)] - row[static_cast<std::size_t>(m - 1)]) /
          (pow4 - 1);
    }
    if (i > 3 && std::abs(next[static_cast<std::size_t>(i)] -
                          row[static_cast<std::size_t>(i - 1)]) < tol)
      return next[static_cast<std::size_t>(i)];
    row.assign(next.begin(), next.end());
  }
  return row.back();
}

// Semi-infinite Laplace-type integral: truncate where e^{-tau} is negligible.
inline double romberg_laplace(const std::function<double(double)>& f, double cutoff = 42.0) {
  return romberg(f, 0.0, cutoff);
}
