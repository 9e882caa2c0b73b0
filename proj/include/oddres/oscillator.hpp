#pragma once

#include <stdexcept>

#include "oddres/rational.hpp"

namespace oddres {

// H(beta) = p^2 + x^2 + beta x^{2k+1}, level index j. The Borel-Leroy order
// attached to this family is q = (2k-1)/2.
struct OscillatorSpec {
  int k = 1;
  int j = 0;

  OscillatorSpec() = default;
  OscillatorSpec(int k_, int j_) : k(k_), j(j_) {
    if (k < 1) throw std::invalid_argument("OscillatorSpec: k must be >= 1");
    if (j < 0) throw std::invalid_argument("OscillatorSpec: j must be >= 0");
  }

  int power() const { return 2 * k + 1; }        // degree of the perturbation
  Rational q() const { return Rational(2 * k - 1, 2); }
  int unperturbed_energy() const { return 2 * j + 1; }
};

}  // namespace oddres
