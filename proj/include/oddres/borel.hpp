#pragma once

#include <vector>

#include "oddres/oscillator.hpp"
#include "oddres/precision.hpp"
#include "oddres/rational.hpp"
#include "oddres/rs_series.hpp"

namespace oddres {

// Borel-Leroy transform of order q = (2k-1)/2: b_s = a_s / Gamma(q s + 1).
// Only even orders survive, and Gamma(q * 2l + 1) = ((2k-1) l)! is an integer
// factorial, so the transform stays exactly rational.
struct BorelSeries {
  OscillatorSpec spec;
  int order = 0;
  std::vector<Rational> b;  // b[0..order], odd entries zero

  // Coefficients of B as a series in z = t^2 (the natural Pade variable for
  // an even series): c[l] = b[2l].
  std::vector<Rational> even_coefficients() const;
};

BorelSeries leroy_transform(const RSExpansion& exp);

// Generic transform for control series at working precision; the Gamma here
// is MPFR's (correctly rounded), documented as the only non-rational path.
std::vector<Real> leroy_transform_generic(const std::vector<Real>& a, const Real& q);

}  // namespace oddres
