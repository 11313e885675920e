#ifndef FHLAB_COMPLEX_HPP_
#define FHLAB_COMPLEX_HPP_

#include <algorithm>
#include <utility>

#include "fhlab/real.hpp"

namespace fhlab {

// Just enough complex arithmetic for principal-branch log/pow/sqrt.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Real& r) : re(r), im(Real::zero(r.precision())) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Complex operator*(const Real& s, const Complex& a) { return a * s; }
inline Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline Real abs(const Complex& z) {
  Real r = Real::zero(std::max(z.re.precision(), z.im.precision()));
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex polar(const Real& r, const Real& theta) {
  return {r * cos(theta), r * sin(theta)};
}

/// Principal logarithm, Im in (-pi, pi].
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }
inline Complex exp(const Complex& z) { return polar(exp(z.re), z.im); }
/// Principal square root (cut along the negative axis).
inline Complex sqrt(const Complex& z) {
  return polar(sqrt(abs(z)), arg(z) / 2);
}
/// Principal power z^p for real p.
inline Complex pow(const Complex& z, const Real& p) {
  return polar(exp(p * log(abs(z))), p * arg(z));
}

}  // namespace fhlab

#endif  // FHLAB_COMPLEX_HPP_
