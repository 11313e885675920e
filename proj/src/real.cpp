#include "fhlab/real.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace fhlab {

namespace {

thread_local Precision g_default_bits = 256;

Precision max_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real r = Real::zero(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

template <typename Fn>
Real binary(const Real& a, const Real& b, Fn fn) {
  Real r = Real::zero(max_prec(a, b));
  fn(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Precision bits_for_digits(int digits) {
  return static_cast<Precision>(std::ceil(digits * 3.321928094887362)) + 8;
}

int digits_for_bits(Precision bits) {
  return static_cast<int>(std::floor(static_cast<double>(bits - 8) * 0.30102999566398120));
}

ScopedPrecision::ScopedPrecision(Precision bits) : saved_(g_default_bits) {
  g_default_bits = bits;
}

ScopedPrecision::~ScopedPrecision() { g_default_bits = saved_; }

Precision ScopedPrecision::current() { return g_default_bits; }

void Real::init(Precision bits) {
  mpfr_init2(v_, std::max<Precision>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

Real::Real() { init(ScopedPrecision::current()); }

Real::Real(double v, Precision bits) {
  init(bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(long double v, Precision bits) {
  init(bits);
  mpfr_set_ld(v_, v, MPFR_RNDN);
}

Real Real::zero(Precision bits) {
  Real r(0, bits);
  return r;
}

Real Real::parse(std::string_view text, Precision bits) {
  Real r = zero(bits);
  std::string s(text);
  mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  init(other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  init(other.precision());
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::at_precision(Precision bits) const {
  Real r = zero(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int significant) const {
  std::vector<char> buf(static_cast<std::size_t>(significant) + 64);
  std::string fmt = "%." + std::to_string(std::max(significant - 1, 0)) + "Re";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
  return std::string(buf.data());
}

namespace {
// In-place ops widen the left operand when the right one is more precise.
void widen(mpfr_ptr x, Precision bits) {
  if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, MPFR_RNDN);
}
}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(v_, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  widen(v_, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  widen(v_, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  widen(v_, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::add_si(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::mul_si(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::div_si(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::mul_d(double o) {
  mpfr_mul_d(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real operator+(const Real& a, double b) {
  Real r = Real::zero(a.precision());
  mpfr_add_d(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, double b) {
  Real r = Real::zero(a.precision());
  mpfr_sub_d(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, double b) {
  Real r = Real::zero(a.precision());
  mpfr_mul_d(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, double b) {
  Real r = Real::zero(a.precision());
  mpfr_div_d(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator+(double a, const Real& b) { return b + a; }
Real operator-(double a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_d_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
Real operator*(double a, const Real& b) { return b * a; }
Real operator/(double a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_d_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

Real si_sub(long a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

Real si_div(long a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const Real& a, double b) {
  return !mpfr_nan_p(a.get()) && !std::isnan(b) && mpfr_cmp_d(a.get(), b) == 0;
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.get()) || std::isnan(b)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.get(), b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real pow(const Real& x, const Real& y) { return binary(x, y, mpfr_pow); }
Real pow(const Real& x, long k) {
  Real r = Real::zero(x.precision());
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real asin(const Real& x) { return unary(x, mpfr_asin); }
Real acos(const Real& x) { return unary(x, mpfr_acos); }
Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real floor(const Real& x) {
  Real r = Real::zero(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real ldexp(const Real& x, long k) {
  Real r = Real::zero(x.precision());
  mpfr_mul_2si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

Real pow10(long k, Precision bits) {
  Real ten(10, bits);
  return pow(ten, k);
}

Real const_pi(Precision bits) {
  Real r = Real::zero(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_log2(Precision bits) {
  Real r = Real::zero(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real const_euler(Precision bits) {
  Real r = Real::zero(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

}  // namespace fhlab
