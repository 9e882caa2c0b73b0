#include "oddres/rs_series.hpp"

#include <stdexcept>
#include <string>

namespace oddres {

RSExpansion rs_expand_with_potential(const OscillatorSpec& spec, int order,
                                     const BandMatrixRational& v) {
  if (order < 0) throw std::invalid_argument("rs_expand: order must be >= 0");
  const std::size_t dim = v.size();
  const std::size_t j = static_cast<std::size_t>(spec.j);

  RSExpansion out;
  out.spec = spec;
  out.order = order;
  out.a.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  out.a[0] = Rational(spec.unperturbed_energy());

  // u[s] holds the order-s wavefunction correction in the scaled basis.
  std::vector<std::vector<Rational>> u;
  u.reserve(static_cast<std::size_t>(order) + 1);
  u.emplace_back(dim, Rational(0));
  u[0][j] = 1;

  for (int s = 1; s <= order; ++s) {
    std::vector<Rational> w = v.apply(u[static_cast<std::size_t>(s - 1)]);

    // Solvability at component j: every u^(t)_j with t >= 1 vanishes, so the
    // only surviving term of the energy sum is a_s itself.
    out.a[static_cast<std::size_t>(s)] = w[j];

    if (s % 2 == 1 && out.a[static_cast<std::size_t>(s)] != 0)
      throw std::logic_error("rs_expand: odd-order coefficient a_" + std::to_string(s) +
                             " is nonzero; recursion is corrupted");

    if (s == order) break;  // the last wavefunction correction is not needed

    std::vector<Rational> us(dim, Rational(0));
    for (std::size_t n = 0; n < dim; ++n) {
      if (n == j) continue;
      Rational rhs = -w[n];
      for (int t = 1; t < s; ++t) {
        const Rational& at = out.a[static_cast<std::size_t>(t)];
        if (at == 0) continue;
        const Rational& comp = u[static_cast<std::size_t>(s - t)][n];
        if (comp != 0) rhs += at * comp;
      }
      if (rhs != 0) {
        // E_n - E_j = 2(n - j) in the unperturbed ladder.
        us[n] = rhs / Rational(2 * (static_cast<long>(n) - static_cast<long>(j)));
      }
    }
    u.push_back(std::move(us));
  }
  return out;
}

RSExpansion rs_expand(const OscillatorSpec& spec, int order) {
  const std::size_t dim =
      static_cast<std::size_t>(spec.j) + static_cast<std::size_t>(spec.power()) *
                                             static_cast<std::size_t>(std::max(order, 1)) + 1;
  return rs_expand_with_potential(spec, order, potential_matrix(spec.k, dim));
}

Rational second_order_oracle(const OscillatorSpec& spec) {
  const int p = spec.power();
  const int j = spec.j;
  const std::size_t dim = static_cast<std::size_t>(j + p) + 1;

  // e_n after applying (a + a^dag) p times to |j>, in the sqrt(n!/j!) gauge.
  std::vector<Rational> e(dim, Rational(0));
  e[static_cast<std::size_t>(j)] = 1;
  for (int step = 0; step < p; ++step) {
    std::vector<Rational> next(dim, Rational(0));
    for (std::size_t n = 0; n < dim; ++n) {
      if (e[n] == 0) continue;
      if (n + 1 < dim) next[n + 1] += e[n];
      if (n >= 1) next[n - 1] += Rational(n) * e[n];
    }
    e.swap(next);
  }

  // |<n|x^p|j>|^2 = 2^{-p} e_n^2 n!/j!, and E_j - E_n = 2(j - n).
  Rational scale = Rational(1, BigInt(1) << p) / Rational(factorial_int(static_cast<unsigned>(j)));
  Rational a2(0);
  for (std::size_t n = 0; n < dim; ++n) {
    if (static_cast<int>(n) == j || e[n] == 0) continue;
    Rational sq = scale * e[n] * e[n] * Rational(factorial_int(static_cast<unsigned>(n)));
    a2 += sq / Rational(2 * (j - static_cast<long>(n)));
  }
  return a2;
}

}  // namespace oddres
