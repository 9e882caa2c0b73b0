#pragma once

#include <vector>

#include "oddres/band_matrix.hpp"
#include "oddres/oscillator.hpp"
#include "oddres/rational.hpp"

namespace oddres {

// Exact Rayleigh-Schrodinger energy coefficients E_j(beta) ~ sum_s a_s beta^s.
struct RSExpansion {
  OscillatorSpec spec;
  int order = 0;                 // highest s computed
  std::vector<Rational> a;       // a[0..order], odd entries identically zero
};

// Term-by-term solve of (H0 - E_j) u^(s) = sum_t a_t u^(s-t) - V u^(s-1) in
// the scaled number basis with intermediate normalization u^(s)_j = 0. The
// order-s correction is supported on indices <= j + (2k+1)s, so a basis of
// j + (2k+1)S + 1 states reproduces every coefficient exactly.
RSExpansion rs_expand(const OscillatorSpec& spec, int order);

// Same recursion with a caller-supplied perturbation matrix (used to probe
// coupling-sign behaviour without touching the public entry point).
RSExpansion rs_expand_with_potential(const OscillatorSpec& spec, int order,
                                     const BandMatrixRational& v);

// Independent route to a_2: expand x^{2k+1}|j> through ladder operators and
// sum |<n|x^{2k+1}|j>|^2 / (E_j - E_n) over n != j. Tracking the coefficient
// of |n> as e_n sqrt(n!/j!) keeps every intermediate rational: raising maps
// e_n -> e_{n+1}, lowering maps e_n -> n e_{n-1}.
Rational second_order_oracle(const OscillatorSpec& spec);

}  // namespace oddres
