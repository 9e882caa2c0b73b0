#pragma once

#include <complex>

#include "oddres/rational.hpp"

namespace oddres {

// Membership predicates for the (arg beta, theta) admissibility parallelogram,
// the summability sector, and the Nevanlinna disk domains. Plain double is
// enough here: these are yes/no gates, not quantitative estimates, and every
// test point sits far from the working-precision scale.
struct RegionSpec {
  int k = 1;
  double delta = 0.1;    // sector inset
  double B_delta = 0.1;  // sector radius bound
  double R = 1.0;        // Nevanlinna disk parameter
};

// Open parallelogram 0 < (2k-1)t + s < pi, 0 < (2k+3)t + s < pi in the
// s = arg beta, t = theta plane.
bool in_parallelogram_P(double arg_beta, double theta, int k);

struct ThetaChoice {
  double theta = 0;
  bool flagged = false;  // arg beta on the closed boundary of the upper-sum arc
};

// Scaling angle on the line (2k+1) theta + arg beta = pi/2. On the
// distributional directions (arg beta <= 0 or >= pi) the angle is nudged into
// the interior by eps and flagged.
ThetaChoice choose_theta(double arg_beta, int k, double eps = 1e-3);

// Strict sector |beta| < B_delta, -(2k-1)pi/4 + delta < arg beta < (2k+3)pi/4 - delta,
// with principal-branch arg (single sheet).
bool sector_membership(std::complex<double> beta, const RegionSpec& spec);

enum class NevanlinnaVariant { upper, lower };

// Upper: Re beta^{-1/q} >= 1/R (as printed; closed). Lower: same test after
// the branch rotation beta' = beta e^{-i pi}, arg kept un-renormalized.
bool nevanlinna_membership(std::complex<double> beta, const Rational& q, double R,
                           NevanlinnaVariant variant);

}  // namespace oddres
