#include "oddres/borel.hpp"

#include <stdexcept>

namespace oddres {

std::vector<Rational> BorelSeries::even_coefficients() const {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(order) / 2 + 1);
  for (std::size_t s = 0; s < b.size(); s += 2) c.push_back(b[s]);
  return c;
}

BorelSeries leroy_transform(const RSExpansion& exp) {
  BorelSeries out;
  out.spec = exp.spec;
  out.order = exp.order;
  out.b.assign(exp.a.size(), Rational(0));
  const unsigned step = static_cast<unsigned>(2 * exp.spec.k - 1);
  for (std::size_t s = 0; s < exp.a.size(); ++s) {
    if (s % 2 == 1) {
      if (exp.a[s] != 0)
        throw std::invalid_argument("leroy_transform: odd coefficient nonzero");
      continue;
    }
    // Gamma(q s + 1) with s = 2l and q = (2k-1)/2 is ((2k-1) l)!.
    out.b[s] = exp.a[s] / Rational(factorial_int(step * static_cast<unsigned>(s / 2)));
  }
  return out;
}

std::vector<Real> leroy_transform_generic(const std::vector<Real>& a, const Real& q) {
  std::vector<Real> b(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    Real arg = q * Real(static_cast<unsigned>(s)) + 1;
    Real g;
    mpfr_gamma(g.backend().data(), arg.backend().data(), MPFR_RNDN);
    b[s] = a[s] / g;
  }
  return b;
}

}  // namespace oddres
