#pragma once

#include <vector>

#include "oddres/precision.hpp"
#include "oddres/rational.hpp"

namespace oddres {

// Diagonal [M/M] approximant with exact rational coefficients. The linear
// solve happens over Q, so Taylor matching through order 2M is an identity,
// not an approximation. `power` records the substitution used to build the
// approximant: values are taken at the series variable z = t^power.
struct PadeApproximant {
  std::vector<Rational> num;  // ascending in z
  std::vector<Rational> den;  // ascending in z, monic (den.back() == 1), den[0] != 0
  int requested_order = 0;
  int order = 0;              // achieved M (== requested unless defective)
  bool defect = false;
  int power = 1;

  std::vector<CReal> roots;   // denominator roots in the z plane
  unsigned root_precision_bits = 0;

  CReal value_z(const CReal& z) const;
  Real value_z(const Real& z) const;
  CReal value_t(const CReal& t) const;   // applies z = t^power
  Real value_t(const Real& t) const;

  // Residue of the rational function at a simple denominator root (z plane).
  CReal residue_z(const CReal& z0) const;

  // Maclaurin coefficients of num/den through the given order, exact.
  std::vector<Rational> taylor(int through_order) const;
};

// Solve for the [M/M] approximant of c[0] + c[1] z + ... by elimination over
// the rationals. A singular Toeplitz block (defect) drops M until the system
// is regular; the result carries the achieved order and a defect flag.
// Requires c.size() >= 2*M + 1.
PadeApproximant pade_construct(const std::vector<Rational>& c, int m, int power = 1);

// Boundary value p(t + i delta) as delta -> 0+ via a halving schedule plus
// Richardson extrapolation. Real part is the principal-part value; at a real
// pole the schedule diverges and the result is flagged instead of thrown.
struct DeltaSchedule {
  double delta0_scale = 1e-2;  // delta_0 = scale * (distance to nearest root)
  int halvings = 12;
  int richardson_order = 2;
};

struct BoundaryValue {
  CReal value;
  Real residual;          // spread of the last extrapolation step
  bool pole_at_point = false;
  Real re_extrapolation;  // Re limit, reported even when flagged
  double im_growth = 0;   // growth factor of Im per delta halving (~2 at a pole)
};

BoundaryValue boundary_value(const PadeApproximant& p, const Real& t,
                             const DeltaSchedule& schedule = {});

}  // namespace oddres
