#pragma once

#include <vector>

#include "oddres/precision.hpp"

namespace oddres {

// Gauss-Laguerre rule for int_0^inf f(x) e^{-x} dx ~ sum w_i f(x_i), built at
// the current working precision. Nodes are seeded in double with the usual
// asymptotic guesses, then polished per node by Newton on the three-term
// recurrence (independent nodes: a natural parallel kernel).
struct GaussLaguerre {
  std::vector<Real> nodes;
  std::vector<Real> weights;

  static GaussLaguerre build(int n, int jobs = 1);
};

struct QuadratureSpec {
  int nodes = 64;
  int jobs = 1;
};

}  // namespace oddres
