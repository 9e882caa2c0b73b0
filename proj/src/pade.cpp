#include "oddres/pade.hpp"

#include <sstream>
#include <stdexcept>

#include "oddres/polynomial.hpp"

namespace oddres {

namespace {

std::vector<Real> to_real_vec(const std::vector<Rational>& v) {
  std::vector<Real> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(to_real(r));
  return out;
}

// Full-pivot rational elimination; returns false on rank deficiency.
bool solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                    std::vector<Rational>& sol) {
  const std::size_t n = m.size();
  std::vector<std::size_t> col_of(n);
  for (std::size_t i = 0; i < n; ++i) col_of[i] = i;

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pr = step, pc = step;
    bool found = false;
    for (std::size_t r = step; r < n && !found; ++r)
      for (std::size_t c = step; c < n; ++c)
        if (m[r][c] != 0) { pr = r; pc = c; found = true; break; }
    if (!found) return false;
    std::swap(m[step], m[pr]);
    std::swap(rhs[step], rhs[pr]);
    if (pc != step) {
      for (std::size_t r = 0; r < n; ++r) std::swap(m[r][step], m[r][pc]);
      std::swap(col_of[step], col_of[pc]);
    }
    for (std::size_t r = step + 1; r < n; ++r) {
      if (m[r][step] == 0) continue;
      Rational factor = m[r][step] / m[step][step];
      m[r][step] = 0;
      for (std::size_t c = step + 1; c < n; ++c) m[r][c] -= factor * m[step][c];
      rhs[r] -= factor * rhs[step];
    }
  }

  std::vector<Rational> y(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * y[c];
    y[i] = acc / m[i][i];
  }
  sol.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) sol[col_of[i]] = y[i];
  return true;
}

}  // namespace

CReal PadeApproximant::value_z(const CReal& z) const {
  std::vector<Real> nr = to_real_vec(num), dr = to_real_vec(den);
  return eval_poly(nr, z) / eval_poly(dr, z);
}

Real PadeApproximant::value_z(const Real& z) const {
  std::vector<Real> nr = to_real_vec(num), dr = to_real_vec(den);
  return eval_poly(nr, z) / eval_poly(dr, z);
}

CReal PadeApproximant::value_t(const CReal& t) const {
  CReal z = t;
  for (int i = 1; i < power; ++i) z *= t;
  return value_z(z);
}

Real PadeApproximant::value_t(const Real& t) const {
  Real z = t;
  for (int i = 1; i < power; ++i) z *= t;
  return value_z(z);
}

CReal PadeApproximant::residue_z(const CReal& z0) const {
  std::vector<Real> nr = to_real_vec(num), dr = to_real_vec(den);
  return eval_poly(nr, z0) / eval_poly_derivative(dr, z0);
}

std::vector<Rational> PadeApproximant::taylor(int through_order) const {
  std::vector<Rational> d(static_cast<std::size_t>(through_order) + 1, Rational(0));
  for (std::size_t s = 0; s < d.size(); ++s) {
    Rational acc = s < num.size() ? num[s] : Rational(0);
    for (std::size_t m = 1; m < den.size() && m <= s; ++m) acc -= den[m] * d[s - m];
    d[s] = acc / den[0];
  }
  return d;
}

PadeApproximant pade_construct(const std::vector<Rational>& c, int m, int power) {
  if (m < 0) throw std::invalid_argument("pade_construct: order must be >= 0");
  if (c.size() < static_cast<std::size_t>(2 * m + 1))
    throw std::invalid_argument("pade_construct: need 2M+1 series coefficients");

  PadeApproximant out;
  out.requested_order = m;
  out.power = power;

  // Normalization q_0 = 1; unknowns q_1..q_M from the Toeplitz block
  //   sum_{j=1..M} c[M+i-j] q_j = -c[M+i],  i = 1..M.
  // A singular block is the defect case: step M down until regular.
  int mm = m;
  std::vector<Rational> q;
  for (; mm > 0; --mm) {
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(mm),
                                         std::vector<Rational>(static_cast<std::size_t>(mm)));
    std::vector<Rational> rhs(static_cast<std::size_t>(mm));
    for (int i = 1; i <= mm; ++i) {
      for (int jj = 1; jj <= mm; ++jj) {
        int idx = mm + i - jj;
        a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(jj - 1)] =
            idx >= 0 ? c[static_cast<std::size_t>(idx)] : Rational(0);
      }
      rhs[static_cast<std::size_t>(i - 1)] = -c[static_cast<std::size_t>(mm + i)];
    }
    std::vector<Rational> sol;
    if (solve_rational(std::move(a), std::move(rhs), sol)) {
      if (mm > 0 && sol[static_cast<std::size_t>(mm - 1)] == 0) continue;  // degree dropped
      q.assign(1, Rational(1));
      q.insert(q.end(), sol.begin(), sol.end());
      break;
    }
  }
  if (mm == 0) q.assign(1, Rational(1));
  out.order = mm;
  out.defect = (mm != m);

  // Numerator from the matched low orders.
  std::vector<Rational> p(static_cast<std::size_t>(mm) + 1, Rational(0));
  for (int s = 0; s <= mm; ++s) {
    Rational acc(0);
    for (int t = 0; t <= s && t <= mm; ++t) acc += q[static_cast<std::size_t>(t)] * c[static_cast<std::size_t>(s - t)];
    p[static_cast<std::size_t>(s)] = acc;
  }

  // Monic denominator; constant term stays nonzero (q_0 was 1).
  Rational lead = q.back();
  for (auto& v : p) v /= lead;
  for (auto& v : q) v /= lead;
  out.num = std::move(p);
  out.den = std::move(q);

  if (out.order > 0) {
    precision::ensure_thread();
    out.roots = aberth_roots(to_real_vec(out.den));
    out.root_precision_bits = precision::bits();
  }
  return out;
}

BoundaryValue boundary_value(const PadeApproximant& p, const Real& t, const DeltaSchedule& schedule) {
  precision::ensure_thread();

  // Schedule scale: distance from the evaluation point to the nearest pole,
  // measured in the z plane where the poles live.
  Real zt = t;
  for (int i = 1; i < p.power; ++i) zt *= t;
  Real dist(-1);
  for (const auto& r : p.roots) {
    Real d = abs(CReal(zt, Real(0)) - r);
    if (dist < 0 || d < dist) dist = d;
  }
  if (dist < 0) dist = 1 + abs(zt);

  Real delta0 = Real(schedule.delta0_scale) * dist;
  if (delta0 == 0) delta0 = Real(schedule.delta0_scale);

  std::vector<CReal> v;
  v.reserve(static_cast<std::size_t>(schedule.halvings) + 1);
  Real delta = delta0;
  for (int mlev = 0; mlev <= schedule.halvings; ++mlev) {
    v.push_back(p.value_t(CReal(t, delta)));
    delta /= 2;
  }

  auto richardson = [&](std::vector<Real> col) {
    // Two elimination levels (orders delta and delta^2), ratio 2 schedule.
    for (int level = 1; level <= schedule.richardson_order; ++level) {
      Real w = pow(Real(2), level);
      std::vector<Real> next(col.size() - 1);
      for (std::size_t i = 0; i + 1 < col.size(); ++i)
        next[i] = (w * col[i + 1] - col[i]) / (w - 1);
      col = std::move(next);
    }
    Real res = col.size() >= 2 ? abs(col[col.size() - 1] - col[col.size() - 2]) : Real(0);
    return std::make_pair(col.back(), res);
  };

  std::vector<Real> res_col, ims_col;
  for (const auto& x : v) res_col.push_back(x.re);
  for (const auto& x : v) ims_col.push_back(x.im);

  auto [re_lim, re_res] = richardson(res_col);
  auto [im_lim, im_res] = richardson(ims_col);

  BoundaryValue out;
  out.re_extrapolation = re_lim;

  // At a real pole Im ~ Re(residue)/delta: magnitudes double along the
  // schedule instead of settling.
  std::size_t nlev = v.size();
  Real tail1 = abs(v[nlev - 1]), tail2 = abs(v[nlev - 2]);
  out.im_growth = (abs(ims_col[nlev - 2]) > 0)
                      ? static_cast<double>(abs(ims_col[nlev - 1]) / abs(ims_col[nlev - 2]))
                      : 0.0;
  if (tail2 > 0 && tail1 > Real(3) / 2 * tail2 && tail1 > 10 * (1 + abs(re_lim))) {
    out.pole_at_point = true;
    out.value = CReal(re_lim, v.back().im);
    out.residual = re_res;
    return out;
  }

  out.value = CReal(re_lim, im_lim);
  out.residual = re_res > im_res ? re_res : im_res;
  return out;
}

}  // namespace oddres
