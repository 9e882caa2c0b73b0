#pragma once

#include <string>

#include "oddres/pade.hpp"
#include "oddres/quadrature.hpp"
#include "oddres/rational.hpp"

namespace oddres {

struct SumDiagnostics {
  Real quad_error;            // |full rule - half rule|
  Real delta_residual;        // boundary-value extrapolation check at a probe node
  Real nearest_pole_t = 0;    // smallest real positive pole in the t plane (0 = none)
  int real_pole_count = 0;
  Real min_node_pole_gap = 0; // tau-plane distance of closest quadrature node to a pole
  bool low_confidence = false;
  std::string pole_report;
};

struct SumResult {
  Real f;  // principal-part (position) component
  Real g;  // discontinuity (width) component, continuation from Im beta > 0
  SumDiagnostics diag;
};

// Distributional Laplace sum
//   f = int_0^inf PP(B)(|beta| tau^q) e^{-tau} dtau
// with simple real poles excised: the pole term r/(tau - tau_p) is removed
// from the quadrature and added back as the closed-form principal value
// -r e^{-tau_p} Ei(tau_p); g collects -pi * sum of residues * e^{-tau_p}
// from the delta part of Im B(t + i0). `stability_reference` (typically the
// next-lower Pade order) bounds the region where the continuation is trusted.
SumResult distributional_sum(const PadeApproximant& p, const Real& beta_abs, const Rational& q,
                             const QuadratureSpec& quad,
                             const PadeApproximant* stability_reference = nullptr);

struct OrdinarySum {
  CReal value;
  Real ray_pole_proximity;  // min relative z-distance of the ray samples to any pole
  bool low_confidence = false;
};

// Ordinary Borel sum along the rotated ray t = beta tau^q, defined for
// 0 < arg beta < pi (strict).
OrdinarySum ordinary_sum(const PadeApproximant& p, const CReal& beta, const Rational& q,
                         const QuadratureSpec& quad);

}  // namespace oddres
