#pragma once

#include <cstddef>
#include <vector>

#include "oddres/rational.hpp"

namespace oddres {

// Square band matrix with exact rational entries, stored row-major as
// entries[r][bandwidth + (c - r)].
class BandMatrixRational {
 public:
  BandMatrixRational(std::size_t n, std::size_t bandwidth);

  std::size_t size() const { return n_; }
  std::size_t bandwidth() const { return w_; }

  const Rational& operator()(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Rational v);

  // Product has bandwidth w_a + w_b; dimensions must agree.
  friend BandMatrixRational operator*(const BandMatrixRational& a,
                                      const BandMatrixRational& b);

  BandMatrixRational& negate();

  // y = A u, exact.
  std::vector<Rational> apply(const std::vector<Rational>& u) const;

 private:
  std::size_t n_;
  std::size_t w_;
  std::vector<std::vector<Rational>> rows_;
  static const Rational zero_;
};

// Position matrix in the scaled basis u_n = c_n / gamma_n with
// gamma_n = sqrt(n!) 2^{-n/2}: subdiagonal 1, superdiagonal (m+1)/2. It is
// similar to the familiar symmetric sqrt((m+1)/2) matrix via diag(gamma_n),
// which keeps every entry rational.
BandMatrixRational scaled_position_matrix(std::size_t n);

// x^{2k+1} in the scaled basis: (2k+1)-st band power of the matrix above.
BandMatrixRational potential_matrix(int k, std::size_t n);

}  // namespace oddres
