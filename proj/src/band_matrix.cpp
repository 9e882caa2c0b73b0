#include "oddres/band_matrix.hpp"

#include <stdexcept>

namespace oddres {

const Rational BandMatrixRational::zero_ = Rational(0);

BandMatrixRational::BandMatrixRational(std::size_t n, std::size_t bandwidth)
    : n_(n), w_(bandwidth), rows_(n, std::vector<Rational>(2 * bandwidth + 1, Rational(0))) {}

const Rational& BandMatrixRational::operator()(std::size_t r, std::size_t c) const {
  if (r >= n_ || c >= n_) throw std::out_of_range("BandMatrixRational: index");
  std::ptrdiff_t off = static_cast<std::ptrdiff_t>(c) - static_cast<std::ptrdiff_t>(r);
  if (off < -static_cast<std::ptrdiff_t>(w_) || off > static_cast<std::ptrdiff_t>(w_))
    return zero_;
  return rows_[r][static_cast<std::size_t>(off + static_cast<std::ptrdiff_t>(w_))];
}

void BandMatrixRational::set(std::size_t r, std::size_t c, Rational v) {
  std::ptrdiff_t off = static_cast<std::ptrdiff_t>(c) - static_cast<std::ptrdiff_t>(r);
  if (r >= n_ || c >= n_ || off < -static_cast<std::ptrdiff_t>(w_) ||
      off > static_cast<std::ptrdiff_t>(w_))
    throw std::out_of_range("BandMatrixRational::set outside band");
  rows_[r][static_cast<std::size_t>(off + static_cast<std::ptrdiff_t>(w_))] = std::move(v);
}

BandMatrixRational operator*(const BandMatrixRational& a, const BandMatrixRational& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("BandMatrixRational: size mismatch");
  BandMatrixRational out(a.n_, a.w_ + b.w_);
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.n_);
  std::ptrdiff_t wa = static_cast<std::ptrdiff_t>(a.w_);
  std::ptrdiff_t wb = static_cast<std::ptrdiff_t>(b.w_);
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    for (std::ptrdiff_t c = std::max<std::ptrdiff_t>(0, r - wa - wb);
         c <= std::min(n - 1, r + wa + wb); ++c) {
      Rational acc(0);
      std::ptrdiff_t lo = std::max({std::ptrdiff_t(0), r - wa, c - wb});
      std::ptrdiff_t hi = std::min({n - 1, r + wa, c + wb});
      for (std::ptrdiff_t m = lo; m <= hi; ++m)
        acc += a(static_cast<std::size_t>(r), static_cast<std::size_t>(m)) *
               b(static_cast<std::size_t>(m), static_cast<std::size_t>(c));
      if (acc != 0) out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), acc);
    }
  }
  return out;
}

BandMatrixRational& BandMatrixRational::negate() {
  for (auto& row : rows_)
    for (auto& v : row) v = -v;
  return *this;
}

std::vector<Rational> BandMatrixRational::apply(const std::vector<Rational>& u) const {
  if (u.size() != n_) throw std::invalid_argument("BandMatrixRational::apply size");
  std::vector<Rational> y(n_, Rational(0));
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(n_);
  std::ptrdiff_t w = static_cast<std::ptrdiff_t>(w_);
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    Rational acc(0);
    for (std::ptrdiff_t c = std::max<std::ptrdiff_t>(0, r - w); c <= std::min(n - 1, r + w); ++c) {
      const Rational& a = (*this)(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (a != 0) acc += a * u[static_cast<std::size_t>(c)];
    }
    y[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return y;
}

BandMatrixRational scaled_position_matrix(std::size_t n) {
  BandMatrixRational x(n, 1);
  for (std::size_t m = 0; m + 1 < n; ++m) {
    x.set(m + 1, m, Rational(1));
    x.set(m, m + 1, Rational(m + 1, 2));
  }
  return x;
}

BandMatrixRational potential_matrix(int k, std::size_t n) {
  if (k < 1) throw std::invalid_argument("potential_matrix: k >= 1");
  if (n < 1) throw std::invalid_argument("potential_matrix: n >= 1");
  BandMatrixRational x = scaled_position_matrix(n);
  BandMatrixRational p = x;
  for (int i = 1; i < 2 * k + 1; ++i) p = p * x;
  return p;
}

}  // namespace oddres
