#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "oddres/oscillator.hpp"
#include "oddres/precision.hpp"

namespace oddres {

// Truncation of H(beta, theta) = e^{-2i theta} P2 + e^{2i theta} X2
//                              + beta e^{(2k+1) i theta} X2K1
// in the first N number states. P2, X2, X2K1 are the exact real symmetric
// matrices of p^2, x^2, x^{2k+1}; the result is complex symmetric.
struct ScaledHamiltonian {
  OscillatorSpec spec;
  std::complex<double> beta;
  double theta = 0;
  int N = 0;
  bool admissible = false;  // (arg beta, theta) inside the parallelogram
  Eigen::MatrixXcd H;
};

ScaledHamiltonian build_scaled_hamiltonian(const OscillatorSpec& spec, std::complex<double> beta,
                                           double theta, int n);

// Eigenvalues sorted by modulus (Hessenberg reduction + shifted QR underneath).
std::vector<std::complex<double>> eigen_spectrum(const ScaledHamiltonian& h);

struct EigenPair {
  std::complex<double> value;
  Eigen::VectorXcd vector;
  double residual = 0;  // ||Hv - Ev|| / (||H||_F ||v||), after one inverse-iteration polish
};

// Values and vectors with a per-pair residual check. Dense everything; meant
// for moderate N.
std::vector<EigenPair> eigen_spectrum_with_vectors(const ScaledHamiltonian& h);

struct EigsolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HomotopyAmbiguity : std::runtime_error {
  std::complex<double> candidate_a, candidate_b;
  HomotopyAmbiguity(const std::string& msg, std::complex<double> a, std::complex<double> b)
      : std::runtime_error(msg), candidate_a(a), candidate_b(b) {}
};

struct TraceOptions {
  std::vector<double> theta_probe_offsets{0.0, 0.02, 0.04};  // applied as +/-
  std::vector<int> n_schedule{100, 200, 400};
  int homotopy_steps = 16;
  double truncation_tol = 1e-8;
  unsigned refine_bits = 128;  // 0 = stay at double precision
  bool keep_final_spectrum = false;
};

struct ResonanceEstimate {
  std::complex<double> E;
  int N_used = 0;
  double theta_used = 0;
  bool theta_flagged = false;
  double plateau_spread = 0;
  double truncation_delta = 0;
  double residual = 0;
  bool converged = false;  // truncation_delta beat the tolerance inside the schedule
  std::vector<std::complex<double>> final_spectrum;
};

// Continue E_j from beta = 0 (exactly 2j+1) along the ray to the requested
// beta, matching by proximity at each step; then grow N through the schedule
// and probe the theta plateau. The matched eigenvalue is re-polished by
// complex-symmetric Rayleigh-quotient iteration at refine_bits so the
// reported deltas measure truncation, not QR roundoff.
ResonanceEstimate trace_resonance(const OscillatorSpec& spec, std::complex<double> beta,
                                  const TraceOptions& opts = {});

// Largest angular excess of the spectrum over the half-plane
// -pi + arg beta + (2k+1) theta <= arg z <= arg beta + (2k+1) theta.
// Containment is Im(z e^{-i phi}) <= 0 with phi the upper edge; the excess is
// reported as a sine of the overshoot angle (<= 0 means inside).
double halfplane_angular_excess(const std::vector<std::complex<double>>& spectrum,
                                double arg_beta, double theta, int k);

}  // namespace oddres
