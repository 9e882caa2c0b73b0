#include "oddres/summation.hpp"

#include <sstream>
#include <stdexcept>

namespace oddres {

namespace {

struct TauPole {
  Real tau;      // image of the pole on the integration axis
  Real t;        // location in the Borel t plane
  Real residue;  // residue in the tau variable
};

// Real positive denominator roots, mapped through t = z^{1/power} and
// tau = (t/|beta|)^{1/q}. Residues chain-rule through both substitutions.
std::vector<TauPole> collect_real_poles(const PadeApproximant& p, const Real& beta_abs,
                                        const Real& qr, Real& axis_warning_gap) {
  std::vector<TauPole> poles;
  axis_warning_gap = -1;
  const Real axis_tol = pow(Real(2), -static_cast<int>(precision::bits()) / 2);
  for (const auto& z0 : p.roots) {
    Real scale = abs(z0);
    if (scale == 0) continue;
    Real imrel = abs(z0.im) / scale;
    if (imrel >= axis_tol) {
      if (z0.re > 0 && (axis_warning_gap < 0 || imrel < axis_warning_gap))
        axis_warning_gap = imrel;  // genuinely complex but near the axis: report
      continue;
    }
    if (z0.re <= 0) continue;

    TauPole tp;
    tp.t = pow(z0.re, Real(1) / p.power);
    Real r_z = p.residue_z(CReal(z0.re, Real(0))).re;
    Real r_t = r_z / (Real(p.power) * pow(tp.t, p.power - 1));
    tp.tau = pow(tp.t / beta_abs, Real(1) / qr);
    // d tau / d t = tau^{1-q} / (q |beta|)
    Real dtau_dt = pow(tp.tau, Real(1) - qr) / (qr * beta_abs);
    tp.residue = r_t * dtau_dt;
    poles.push_back(tp);
  }
  return poles;
}

Real quad_pass(const PadeApproximant& p, const GaussLaguerre& rule, const Real& beta_abs,
               const Real& qr, const std::vector<TauPole>& poles, Real* min_gap) {
  Real acc(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Real& tau = rule.nodes[i];
    Real t = beta_abs * pow(tau, qr);
    Real val = p.value_t(t);
    for (const auto& pole : poles) {
      Real gap = abs(tau - pole.tau);
      if (min_gap && (*min_gap < 0 || gap < *min_gap)) *min_gap = gap;
      val -= pole.residue / (tau - pole.tau);
    }
    acc += rule.weights[i] * val;
  }
  return acc;
}

}  // namespace

SumResult distributional_sum(const PadeApproximant& p, const Real& beta_abs, const Rational& q,
                             const QuadratureSpec& quad, const PadeApproximant* stability_reference) {
  if (beta_abs <= 0) throw std::invalid_argument("distributional_sum: beta_abs must be positive");
  if (q <= 0) throw std::invalid_argument("distributional_sum: q must be positive");
  if (quad.nodes < 4) throw std::invalid_argument("distributional_sum: too few quadrature nodes");
  precision::ensure_thread();

  const Real qr = to_real(q);
  Real near_axis(-1);
  std::vector<TauPole> poles = collect_real_poles(p, beta_abs, qr, near_axis);

  GaussLaguerre full = GaussLaguerre::build(quad.nodes, quad.jobs);
  GaussLaguerre half = GaussLaguerre::build(quad.nodes / 2, quad.jobs);

  Real min_gap(-1);
  Real quad_full = quad_pass(p, full, beta_abs, qr, poles, &min_gap);
  Real quad_half = quad_pass(p, half, beta_abs, qr, poles, nullptr);

  Real f = quad_full;
  Real g(0);
  const Real pi = acos(Real(-1));
  for (const auto& pole : poles) {
    f += pole.residue * pv_laplace_pole(pole.tau);
    g -= pi * pole.residue * exp(-pole.tau);
  }

  SumResult out;
  out.f = f;
  out.g = g;
  out.diag.quad_error = abs(quad_full - quad_half);
  out.diag.real_pole_count = static_cast<int>(poles.size());
  out.diag.min_node_pole_gap = min_gap < 0 ? Real(0) : min_gap;
  Real nearest(-1);
  for (const auto& pole : poles)
    if (nearest < 0 || pole.t < nearest) nearest = pole.t;
  out.diag.nearest_pole_t = nearest < 0 ? Real(0) : nearest;

  // Continuation-trust horizon: past the last node where this approximant and
  // the reference still agree, the Laplace weight must be negligible.
  if (stability_reference) {
    Real distrusted_mass(0);
    bool disagreed = false;
    const Real agree_tol = Real(1) / 100000000;  // 1e-8 relative
    for (std::size_t i = 0; i < full.nodes.size(); ++i) {
      Real t = beta_abs * pow(full.nodes[i], qr);
      if (!disagreed) {
        Real a = p.value_t(t), b = stability_reference->value_t(t);
        if (abs(a - b) > agree_tol * (1 + abs(a))) disagreed = true;
      }
      if (disagreed) distrusted_mass += full.weights[i];
    }
    out.diag.low_confidence = distrusted_mass > Real(1) / Real(10000000000LL);
  }

  // One boundary-value spot check away from the poles: the delta-extrapolated
  // PP value must match the direct real evaluation.
  {
    std::size_t probe = full.nodes.size() / 3;
    Real t = beta_abs * pow(full.nodes[probe], qr);
    BoundaryValue bv = boundary_value(p, t);
    out.diag.delta_residual = bv.pole_at_point ? Real(-1) : abs(bv.value.re - p.value_t(t));
  }

  std::ostringstream rep;
  rep << "real_poles=" << poles.size();
  if (!poles.empty())
    rep << ";t_min=" << format_real(out.diag.nearest_pole_t, 8)
        << ";node_gap=" << format_real(out.diag.min_node_pole_gap, 4);
  if (near_axis >= 0) rep << ";near_axis_im=" << format_real(near_axis, 4);
  if (out.diag.low_confidence) rep << ";low_confidence";
  out.diag.pole_report = rep.str();
  return out;
}

OrdinarySum ordinary_sum(const PadeApproximant& p, const CReal& beta, const Rational& q,
                         const QuadratureSpec& quad) {
  Real argb = arg(beta);
  const Real pi = acos(Real(-1));
  if (!(argb > 0 && argb < pi))
    throw std::invalid_argument("ordinary_sum: requires 0 < arg beta < pi");
  if (quad.nodes < 4) throw std::invalid_argument("ordinary_sum: too few quadrature nodes");
  precision::ensure_thread();

  const Real qr = to_real(q);
  GaussLaguerre rule = GaussLaguerre::build(quad.nodes, quad.jobs);

  OrdinarySum out;
  out.ray_pole_proximity = -1;
  CReal acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    Real w = pow(rule.nodes[i], qr);
    CReal t{beta.re * w, beta.im * w};
    CReal z = t;
    for (int pw = 1; pw < p.power; ++pw) z *= t;
    for (const auto& root : p.roots) {
      Real d = abs(z - root) / (1 + abs(root));
      if (out.ray_pole_proximity < 0 || d < out.ray_pole_proximity) out.ray_pole_proximity = d;
    }
    acc += rule.weights[i] * p.value_z(z);
  }
  out.value = acc;
  if (out.ray_pole_proximity < 0) out.ray_pole_proximity = Real(1);
  out.low_confidence = out.ray_pole_proximity < Real(1) / 1000;
  return out;
}

}  // namespace oddres
