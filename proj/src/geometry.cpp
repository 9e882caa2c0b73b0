#include "oddres/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace oddres {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

bool in_parallelogram_P(double arg_beta, double theta, int k) {
  if (k < 1) throw std::invalid_argument("in_parallelogram_P: k >= 1");
  double lo = (2 * k - 1) * theta + arg_beta;
  double hi = (2 * k + 3) * theta + arg_beta;
  return lo > 0 && lo < kPi && hi > 0 && hi < kPi;
}

ThetaChoice choose_theta(double arg_beta, int k, double eps) {
  if (k < 1) throw std::invalid_argument("choose_theta: k >= 1");
  ThetaChoice out;
  out.theta = -arg_beta / (2 * k + 1) + kPi / (2 * (2 * k + 1));
  if (arg_beta <= 0) {
    out.flagged = true;
    out.theta -= eps;
  } else if (arg_beta >= kPi) {
    out.flagged = true;
    out.theta += eps;
  }
  return out;
}

bool sector_membership(std::complex<double> beta, const RegionSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("sector_membership: k >= 1");
  double m = std::abs(beta);
  if (!(m > 0 && m < spec.B_delta)) return false;
  double s = std::arg(beta);
  double lo = -(2 * spec.k - 1) * kPi / 4 + spec.delta;
  double hi = (2 * spec.k + 3) * kPi / 4 - spec.delta;
  return s > lo && s < hi;
}

bool nevanlinna_membership(std::complex<double> beta, const Rational& q, double R,
                           NevanlinnaVariant variant) {
  if (R <= 0) throw std::invalid_argument("nevanlinna_membership: R > 0");
  if (q <= 0) throw std::invalid_argument("nevanlinna_membership: q > 0");
  double m = std::abs(beta);
  if (m == 0) return false;
  double s = std::arg(beta);
  if (variant == NevanlinnaVariant::lower) s -= kPi;  // beta' = beta e^{-i pi}, branch kept
  double invq = 1.0 / static_cast<double>(q);
  // Re beta^{-1/q} computed in polar form on the chosen branch.
  double re = std::pow(m, -invq) * std::cos(-invq * s);
  return re >= 1.0 / R;
}

}  // namespace oddres
