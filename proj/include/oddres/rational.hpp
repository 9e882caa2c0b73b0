#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace oddres {

// Exact rational arithmetic (GMP). Everything on the coefficient side of the
// pipeline -- recursion, Leroy transform, Pade solve -- stays in this type;
// floating point enters only at evaluation.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline BigInt factorial_int(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace oddres
