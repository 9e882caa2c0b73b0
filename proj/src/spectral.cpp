#include "oddres/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "oddres/band_matrix.hpp"
#include "oddres/geometry.hpp"

namespace oddres {

namespace {

// gamma_m / gamma_n = sqrt(prod_{i=n+1..m} i) * 2^{(n-m)/2} for m >= n; the
// integer product fits 64 bits for every (N, k) this solver accepts.
double gamma_ratio(int m, int n) {
  if (m < n) return 1.0 / gamma_ratio(n, m);
  std::uint64_t prod = 1;
  for (int i = n + 1; i <= m; ++i) prod *= static_cast<std::uint64_t>(i);
  return std::sqrt(static_cast<double>(prod)) * std::pow(2.0, -0.5 * (m - n));
}

Real gamma_ratio_real(int m, int n) {
  if (m < n) return 1 / gamma_ratio_real(n, m);
  Real prod(1);
  for (int i = n + 1; i <= m; ++i) prod *= i;
  return sqrt(prod) * pow(Real(2), Real(n - m) / 2);
}

}  // namespace

ScaledHamiltonian build_scaled_hamiltonian(const OscillatorSpec& spec, std::complex<double> beta,
                                           double theta, int n) {
  if (n < 2 * spec.k + 2)
    throw std::invalid_argument("build_scaled_hamiltonian: N must exceed the perturbation band");

  ScaledHamiltonian out;
  out.spec = spec;
  out.beta = beta;
  out.theta = theta;
  out.admissible = beta == 0.0 ? true : in_parallelogram_P(std::arg(beta), theta, spec.k);
  out.N = n;
  out.H = Eigen::MatrixXcd::Zero(n, n);

  const std::complex<double> rot_p = std::exp(std::complex<double>(0, -2 * theta));
  const std::complex<double> rot_x = std::exp(std::complex<double>(0, 2 * theta));
  const std::complex<double> rot_v =
      beta * std::exp(std::complex<double>(0, (2 * spec.k + 1) * theta));

  for (int m = 0; m < n; ++m) {
    // x^2 and p^2 share the diagonal (2m+1)/2 and differ by the sign of the
    // sqrt((m+1)(m+2))/2 coupling two steps away.
    out.H(m, m) = (rot_p + rot_x) * ((2.0 * m + 1.0) / 2.0);
    if (m + 2 < n) {
      double c = std::sqrt((m + 1.0) * (m + 2.0)) / 2.0;
      std::complex<double> v = (rot_x - rot_p) * c;
      out.H(m, m + 2) = v;
      out.H(m + 2, m) = v;
    }
  }

  if (beta != 0.0) {
    // One symmetric value per (m, c) pair, mirrored, so the matrix is
    // bitwise equal to its transpose.
    BandMatrixRational xp = potential_matrix(spec.k, static_cast<std::size_t>(n));
    int band = 2 * spec.k + 1;
    for (int m = 0; m < n; ++m) {
      for (int c = std::max(0, m - band); c <= m; ++c) {
        const Rational& r = xp(static_cast<std::size_t>(m), static_cast<std::size_t>(c));
        if (r == 0) continue;
        std::complex<double> v = rot_v * (static_cast<double>(r) * gamma_ratio(m, c));
        out.H(m, c) += v;
        if (c != m) out.H(c, m) += v;
      }
    }
  }
  return out;
}

std::vector<std::complex<double>> eigen_spectrum(const ScaledHamiltonian& h) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h.H, false);
  if (es.info() != Eigen::Success)
    throw EigsolverError("eigen_spectrum: QR iteration failed to converge at N=" +
                         std::to_string(h.N));
  std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + h.N);
  std::sort(ev.begin(), ev.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              return std::abs(a) < std::abs(b);
            });
  return ev;
}

std::vector<EigenPair> eigen_spectrum_with_vectors(const ScaledHamiltonian& h) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h.H, true);
  if (es.info() != Eigen::Success)
    throw EigsolverError("eigen_spectrum_with_vectors: QR iteration failed at N=" +
                         std::to_string(h.N));
  double hnorm = h.H.norm();
  std::vector<EigenPair> out(static_cast<std::size_t>(h.N));
  for (int i = 0; i < h.N; ++i) {
    EigenPair& p = out[static_cast<std::size_t>(i)];
    p.value = es.eigenvalues()[i];
    p.vector = es.eigenvectors().col(i);
    // One inverse-iteration step against a slightly shifted pivot tightens
    // the vector before the residual is measured.
    std::complex<double> shift = p.value * (1.0 + 1e-12) + std::complex<double>(1e-13, 0);
    Eigen::MatrixXcd A = h.H - shift * Eigen::MatrixXcd::Identity(h.N, h.N);
    Eigen::VectorXcd w = Eigen::PartialPivLU<Eigen::MatrixXcd>(A).solve(p.vector);
    double wn = w.norm();
    if (wn > 0 && std::isfinite(wn)) p.vector = w / wn;
    p.residual = (h.H * p.vector - p.value * p.vector).norm() / (hnorm > 0 ? hnorm : 1.0);
  }
  std::sort(out.begin(), out.end(), [](const EigenPair& a, const EigenPair& b) {
    return std::abs(a.value) < std::abs(b.value);
  });
  return out;
}

namespace {

struct Matched {
  std::complex<double> value;
  double gap_to_second;  // distance from the reference to the runner-up
};

Matched nearest_eigenvalue(const std::vector<std::complex<double>>& spectrum,
                           std::complex<double> ref) {
  Matched m{spectrum.front(), 0};
  double best = std::abs(spectrum.front() - ref), second = -1;
  for (std::size_t i = 1; i < spectrum.size(); ++i) {
    double d = std::abs(spectrum[i] - ref);
    if (d < best) {
      second = best;
      best = d;
      m.value = spectrum[i];
    } else if (second < 0 || d < second) {
      second = d;
    }
  }
  m.gap_to_second = second < 0 ? best : second;
  return m;
}

// Banded complex matrix over the working reals. Rows keep a window of w
// columns either side of the diagonal plus w extra above for pivoting fill
// (LU of a band matrix with row swaps widens the upper band to 2w).
struct MpBand {
  int n = 0;
  int w = 0;
  std::vector<CReal> a;  // row-major windows, width 3w+1

  void init(int n_, int w_) {
    n = n_;
    w = w_;
    a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(3 * w + 1),
             CReal(Real(0), Real(0)));
  }
  int width() const { return 3 * w + 1; }
  bool stored(int i, int c) const { return c >= i - w && c <= i + 2 * w && c >= 0 && c < n; }
  CReal& at(int i, int c) { return a[static_cast<std::size_t>(i * width() + (c - i + w))]; }
  const CReal& at(int i, int c) const {
    return a[static_cast<std::size_t>(i * width() + (c - i + w))];
  }

  // y = A x over the physical band (+-w); the fill columns are LU territory.
  std::vector<CReal> apply(const std::vector<CReal>& x) const {
    std::vector<CReal> y(static_cast<std::size_t>(n), CReal(Real(0), Real(0)));
    for (int i = 0; i < n; ++i) {
      CReal acc{Real(0), Real(0)};
      int lo = std::max(0, i - w), hi = std::min(n - 1, i + w);
      for (int c = lo; c <= hi; ++c) acc += at(i, c) * x[static_cast<std::size_t>(c)];
      y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
  }

  Real frobenius() const {
    Real s(0);
    for (int i = 0; i < n; ++i) {
      int lo = std::max(0, i - w), hi = std::min(n - 1, i + w);
      for (int c = lo; c <= hi; ++c) s += norm2(at(i, c));
    }
    return sqrt(s);
  }
};

// In-place band LU with partial pivoting (row swaps confined to the band
// window). Returns false when a whole pivot column vanishes.
bool band_factor(MpBand& m, std::vector<int>& piv) {
  piv.assign(static_cast<std::size_t>(m.n), 0);
  for (int j = 0; j < m.n; ++j) {
    int last_row = std::min(m.n - 1, j + m.w);
    int p = j;
    Real best = norm2(m.at(j, j));
    for (int i = j + 1; i <= last_row; ++i) {
      Real v = norm2(m.at(i, j));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0) return false;
    piv[static_cast<std::size_t>(j)] = p;
    int col_hi = std::min(m.n - 1, j + 2 * m.w);
    if (p != j)
      for (int c = j; c <= col_hi; ++c) std::swap(m.at(j, c), m.at(p, c));
    CReal inv = CReal(Real(1), Real(0)) / m.at(j, j);
    for (int i = j + 1; i <= last_row; ++i) {
      CReal& l = m.at(i, j);
      if (l.re == 0 && l.im == 0) continue;
      l *= inv;
      for (int c = j + 1; c <= col_hi; ++c) m.at(i, c) -= l * m.at(j, c);
    }
  }
  return true;
}

void band_solve(const MpBand& f, const std::vector<int>& piv, std::vector<CReal>& x) {
  for (int j = 0; j < f.n; ++j) {
    int p = piv[static_cast<std::size_t>(j)];
    if (p != j) std::swap(x[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(p)]);
    int last_row = std::min(f.n - 1, j + f.w);
    for (int i = j + 1; i <= last_row; ++i)
      x[static_cast<std::size_t>(i)] -= f.at(i, j) * x[static_cast<std::size_t>(j)];
  }
  for (int i = f.n - 1; i >= 0; --i) {
    CReal acc = x[static_cast<std::size_t>(i)];
    int col_hi = std::min(f.n - 1, i + 2 * f.w);
    for (int c = i + 1; c <= col_hi; ++c) acc -= f.at(i, c) * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(i)] = acc / f.at(i, i);
  }
}

MpBand assemble_band(const OscillatorSpec& spec, std::complex<double> beta, double theta, int n) {
  MpBand h;
  h.init(n, 2 * spec.k + 1);

  Real th(theta);
  CReal rot_p = polar_unit(-2 * th);
  CReal rot_x = polar_unit(2 * th);
  CReal rot_v = CReal(Real(beta.real()), Real(beta.imag())) * polar_unit(Real(2 * spec.k + 1) * th);

  for (int m = 0; m < n; ++m) {
    Real d = Real(2 * m + 1) / 2;
    h.at(m, m) += d * (rot_p + rot_x);
    if (m + 2 < n) {
      Real c = sqrt(Real(m + 1) * Real(m + 2)) / 2;
      CReal v = c * (rot_x - rot_p);
      h.at(m, m + 2) += v;
      h.at(m + 2, m) += v;
    }
  }
  if (beta != 0.0) {
    BandMatrixRational xp = potential_matrix(spec.k, static_cast<std::size_t>(n));
    int band = 2 * spec.k + 1;
    for (int m = 0; m < n; ++m)
      for (int c = std::max(0, m - band); c <= m; ++c) {
        const Rational& r = xp(static_cast<std::size_t>(m), static_cast<std::size_t>(c));
        if (r == 0) continue;
        CReal v = (to_real(r) * gamma_ratio_real(m, c)) * rot_v;
        h.at(m, c) += v;
        if (c != m) h.at(c, m) += v;
      }
  }
  return h;
}

struct Refined {
  CReal value;
  double residual = 0;
};

// Shifted inverse iteration with the complex-symmetric (transpose, not
// conjugate) Rayleigh quotient, two factor-iterate rounds at `bits`. The
// band factorization keeps this cheap even at large N.
Refined refine_eigenvalue(const OscillatorSpec& spec, std::complex<double> beta, double theta,
                          int n, std::complex<double> seed, unsigned bits) {
  PrecisionGuard guard(bits);
  MpBand h = assemble_band(spec, beta, theta, n);
  Real hnorm = h.frobenius();

  CReal e(Real(seed.real()), Real(seed.imag()));
  std::vector<CReal> v(static_cast<std::size_t>(n), CReal(Real(0), Real(0)));
  v[static_cast<std::size_t>(std::min(spec.j, n - 1))] = CReal(Real(1), Real(0));

  std::vector<int> piv;
  for (int round = 0; round < 2; ++round) {
    MpBand f = h;
    CReal shift = e;
    for (int attempt = 0;; ++attempt) {
      MpBand trial = f;
      for (int i = 0; i < n; ++i) trial.at(i, i) -= shift;
      if (band_factor(trial, piv)) {
        f = std::move(trial);
        break;
      }
      if (attempt >= 2) {
        Refined bad;
        bad.value = e;
        bad.residual = -1;
        return bad;
      }
      // Exact hit on a singular shift: nudge off by a few ulps of the scale.
      shift += CReal(hnorm * pow(Real(2), -static_cast<int>(bits) + 6), Real(0));
    }
    for (int it = 0; it < 3; ++it) {
      band_solve(f, piv, v);
      Real m(0);
      for (const auto& c : v) {
        Real a2 = norm2(c);
        if (a2 > m) m = a2;
      }
      Real inv = 1 / sqrt(m);
      for (auto& c : v) c = inv * c;
    }
    std::vector<CReal> hv = h.apply(v);
    CReal num{Real(0), Real(0)}, den{Real(0), Real(0)};
    for (int i = 0; i < n; ++i) {
      num += v[static_cast<std::size_t>(i)] * hv[static_cast<std::size_t>(i)];  // v^T H v
      den += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    }
    e = num / den;
  }

  std::vector<CReal> hv = h.apply(v);
  Real r2(0), v2(0);
  for (int i = 0; i < n; ++i) {
    CReal d = hv[static_cast<std::size_t>(i)] - e * v[static_cast<std::size_t>(i)];
    r2 += norm2(d);
    v2 += norm2(v[static_cast<std::size_t>(i)]);
  }
  Refined out;
  out.value = e;
  out.residual = static_cast<double>(sqrt(r2) / (hnorm * sqrt(v2)));
  return out;
}

}  // namespace

ResonanceEstimate trace_resonance(const OscillatorSpec& spec, std::complex<double> beta,
                                  const TraceOptions& opts) {
  if (opts.n_schedule.empty()) throw std::invalid_argument("trace_resonance: empty N schedule");
  if (opts.homotopy_steps < 1) throw std::invalid_argument("trace_resonance: homotopy_steps >= 1");

  ResonanceEstimate out;
  if (beta == 0.0) {
    out.E = {static_cast<double>(spec.unperturbed_energy()), 0.0};
    out.N_used = opts.n_schedule.front();
    out.converged = true;
    return out;
  }

  const double arg_beta = std::arg(beta);
  ThetaChoice tc = choose_theta(arg_beta, spec.k);
  out.theta_used = tc.theta;
  out.theta_flagged = tc.flagged;
  if (!in_parallelogram_P(arg_beta, tc.theta, spec.k))
    throw std::invalid_argument("trace_resonance: no admissible scaling angle for this arg beta");

  // Admissible probe angles around theta*.
  std::vector<double> probes;
  for (double off : opts.theta_probe_offsets)
    for (double sgn : {1.0, -1.0}) {
      double th = tc.theta + sgn * off;
      if (!in_parallelogram_P(arg_beta, th, spec.k)) continue;
      bool dup = false;
      for (double p : probes) dup = dup || std::abs(p - th) < 1e-12;
      if (!dup) probes.push_back(th);
    }
  if (probes.empty()) throw std::invalid_argument("trace_resonance: every theta probe inadmissible");

  // Proximity-matched continuation from beta = 0 at the smallest N.
  const int n0 = opts.n_schedule.front();
  std::complex<double> current;
  for (int steps = opts.homotopy_steps;; steps *= 2) {
    current = {static_cast<double>(spec.unperturbed_energy()), 0.0};
    double radius = 1.0;  // half-gap around 2j+1 in the unperturbed spectrum
    bool ambiguous = false;
    std::complex<double> rival;
    for (int i = 1; i <= steps; ++i) {
      std::complex<double> bi = beta * (static_cast<double>(i) / steps);
      auto spec_i = eigen_spectrum(build_scaled_hamiltonian(spec, bi, tc.theta, n0));
      Matched m = nearest_eigenvalue(spec_i, current);
      if (m.gap_to_second < radius && std::abs(m.value - current) < radius) {
        // Runner-up also inside the matching radius: the branch is ambiguous
        // at this resolution.
        auto rivals = spec_i;
        std::sort(rivals.begin(), rivals.end(),
                  [&](std::complex<double> a, std::complex<double> b) {
                    return std::abs(a - current) < std::abs(b - current);
                  });
        ambiguous = true;
        rival = rivals[1];
        current = m.value;
        break;
      }
      current = m.value;
      radius = 0.5 * m.gap_to_second;
    }
    if (!ambiguous) break;
    if (steps >= opts.homotopy_steps * 4)
      throw HomotopyAmbiguity("trace_resonance: eigenvalue branches unresolved along homotopy",
                              current, rival);
  }

  auto polished = [&](double theta, int n, std::complex<double> seed) -> Refined {
    if (opts.refine_bits == 0) {
      Refined r;
      r.value = CReal(Real(seed.real()), Real(seed.imag()));
      r.residual = 0;
      return r;
    }
    return refine_eigenvalue(spec, beta, theta, n, seed, opts.refine_bits);
  };

  // N schedule: the truncation delta is the move of the refined eigenvalue
  // between consecutive basis sizes.
  std::complex<double> e_n = current;
  Refined prev_ref = polished(tc.theta, n0, e_n);
  Refined final_ref = prev_ref;
  out.N_used = n0;
  out.truncation_delta = std::numeric_limits<double>::infinity();
  out.converged = false;
  for (std::size_t idx = 1; idx < opts.n_schedule.size(); ++idx) {
    int n = opts.n_schedule[idx];
    auto sp = eigen_spectrum(build_scaled_hamiltonian(spec, beta, tc.theta, n));
    Matched m = nearest_eigenvalue(sp, e_n);
    e_n = m.value;
    Refined ref = polished(tc.theta, n, e_n);
    out.truncation_delta = static_cast<double>(abs(ref.value - prev_ref.value));
    out.N_used = n;
    prev_ref = ref;
    final_ref = ref;
    if (out.truncation_delta < opts.truncation_tol) {
      out.converged = true;
      break;
    }
  }

  out.E = {static_cast<double>(final_ref.value.re), static_cast<double>(final_ref.value.im)};
  out.residual = final_ref.residual;

  // Theta plateau at the final truncation size. The resonance is invariant
  // under admissible angle changes, so each probe seeds its own inverse
  // iteration from the located value; without refinement fall back to the
  // probe spectrum.
  double spread = 0;
  for (double th : probes) {
    if (std::abs(th - tc.theta) < 1e-12) continue;
    double d;
    if (opts.refine_bits == 0) {
      auto sp = eigen_spectrum(build_scaled_hamiltonian(spec, beta, th, out.N_used));
      d = std::abs(nearest_eigenvalue(sp, out.E).value - out.E);
    } else {
      Refined ref = refine_eigenvalue(spec, beta, th, out.N_used, out.E, opts.refine_bits);
      d = static_cast<double>(abs(ref.value - final_ref.value));
    }
    spread = std::max(spread, d);
  }
  out.plateau_spread = spread;

  if (opts.keep_final_spectrum)
    out.final_spectrum = eigen_spectrum(build_scaled_hamiltonian(spec, beta, tc.theta, out.N_used));
  return out;
}

double halfplane_angular_excess(const std::vector<std::complex<double>>& spectrum, double arg_beta,
                                double theta, int k) {
  double phi = arg_beta + (2 * k + 1) * theta;
  std::complex<double> rot = std::exp(std::complex<double>(0, -phi));
  double worst = -1.0;
  for (const auto& z : spectrum) {
    double m = std::abs(z);
    if (m == 0) continue;
    worst = std::max(worst, (z * rot).imag() / m);
  }
  return worst;
}

}  // namespace oddres
