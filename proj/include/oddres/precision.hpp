#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <atomic>
#include <cmath>
#include <string>

#include "oddres/rational.hpp"

namespace oddres {

// Variable-precision real, default 256-bit significand. The working precision
// is process-wide and must be asserted per thread before constructing values
// (boost keeps the default per thread).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

namespace precision {

inline std::atomic<unsigned>& requested_bits() {
  static std::atomic<unsigned> bits{256};
  return bits;
}

inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
}

inline void ensure_thread() {
  unsigned want = digits10_for_bits(requested_bits().load());
  if (Real::default_precision() != want) Real::default_precision(want);
}

inline void set_bits(unsigned bits) {
  requested_bits().store(bits);
  ensure_thread();
}

inline unsigned bits() { return requested_bits().load(); }

}  // namespace precision

// Scoped precision switch: raises (or lowers) the working precision for the
// lifetime of the guard and restores the previous setting on exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits_) : saved_(precision::bits()) {
    precision::set_bits(bits_);
  }
  ~PrecisionGuard() { precision::set_bits(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const Rational& r) { return Real(r); }

// Minimal complex-over-anything. std::complex is only specified for the
// builtin floating types, so the multiprecision paths use this instead.
template <class T>
struct Cx {
  T re{};
  T im{};

  Cx() = default;
  Cx(T r) : re(std::move(r)) {}
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Cx operator-() const { return {-re, -im}; }
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  Cx& operator*=(const Cx& o) {
    T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Cx& operator/=(const Cx& o) {
    T d = o.re * o.re + o.im * o.im;
    T r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
  }
};

template <class T> Cx<T> operator+(Cx<T> a, const Cx<T>& b) { return a += b; }
template <class T> Cx<T> operator-(Cx<T> a, const Cx<T>& b) { return a -= b; }
template <class T> Cx<T> operator*(Cx<T> a, const Cx<T>& b) { return a *= b; }
template <class T> Cx<T> operator/(Cx<T> a, const Cx<T>& b) { return a /= b; }
template <class T> Cx<T> operator*(const T& s, Cx<T> a) { return {s * a.re, s * a.im}; }

template <class T> Cx<T> conj(const Cx<T>& a) { return {a.re, -a.im}; }
template <class T> T norm2(const Cx<T>& a) { return a.re * a.re + a.im * a.im; }
template <class T> T abs(const Cx<T>& a) {
  using std::sqrt;
  using boost::multiprecision::sqrt;
  return sqrt(norm2(a));
}
template <class T> T arg(const Cx<T>& a) {
  using std::atan2;
  using boost::multiprecision::atan2;
  return atan2(a.im, a.re);
}

using CReal = Cx<Real>;

inline CReal polar_unit(const Real& phi) { return {cos(phi), sin(phi)}; }

// Ei(a), a > 0 (correctly rounded; exposed for the principal-value kernel).
inline Real exp_integral_ei(const Real& a) {
  Real out;
  mpfr_eint(out.backend().data(), a.backend().data(), MPFR_RNDN);
  return out;
}

// PV int_0^inf e^{-tau}/(tau - a) dtau  =  -e^{-a} Ei(a)   for a > 0.
// Far poles switch to the asymptotic tail: past the default MPFR exponent
// range (2^30 bits, i.e. a ~ 7e8) the exp/Ei pair degenerates to 0 * inf,
// so the crossover sits well below that. Truncating after the 6/a^3 term
// leaves a relative error ~24/a^4, immaterial at a >= 1e8.
inline Real pv_laplace_pole(const Real& a) {
  if (a > Real(1e8)) {
    Real inv = Real(1) / a;
    return -inv * (Real(1) + inv * (Real(1) + inv * (Real(2) + 6 * inv)));
  }
  return -exp(-a) * exp_integral_ei(a);
}

// Fixed-width scientific form used by every CSV writer: deterministic and
// precision-independent for the digits shown.
std::string format_real(const Real& x, unsigned sig_digits = 30);
std::string format_real_hex(const Real& x);

}  // namespace oddres
