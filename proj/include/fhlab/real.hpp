#ifndef FHLAB_REAL_HPP_
#define FHLAB_REAL_HPP_

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>

namespace fhlab {

using Precision = mpfr_prec_t;

/// Binary precision needed to carry `digits` significant decimal digits.
Precision bits_for_digits(int digits);
/// Decimal digits representable at `bits` of binary precision (rounded down).
int digits_for_bits(Precision bits);

/// Thread-local precision used for values constructed without an explicit
/// precision. The previous default is restored on destruction.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(Precision bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  static Precision current();

 private:
  Precision saved_;
};

/// Arbitrary-precision real number backed by an MPFR value.
///
/// Every value carries its own precision. Arithmetic results take the larger
/// precision of the two operands; mixed operations with built-in numbers keep
/// the precision of the Real operand. Copy and assignment copy the precision.
class Real {
 public:
  Real();
  template <std::integral I>
  explicit Real(I v, Precision bits = ScopedPrecision::current()) {
    init(bits);
    if constexpr (std::is_signed_v<I>) {
      mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
    } else {
      mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
    }
  }
  explicit Real(double v, Precision bits = ScopedPrecision::current());
  explicit Real(long double v, Precision bits = ScopedPrecision::current());

  static Real zero(Precision bits);
  /// Decimal literal correctly rounded to `bits`.
  static Real parse(std::string_view text, Precision bits = ScopedPrecision::current());

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded (or zero-extended) to `bits`.
  Real at_precision(Precision bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Scientific notation with `significant` digits and a lowercase `e`.
  std::string str(int significant = 30) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& add_si(long o);
  Real& mul_si(long o);
  Real& div_si(long o);
  Real& mul_d(double o);
  Real operator-() const;

  template <std::integral I>
  Real& operator+=(I o) { return add_si(static_cast<long>(o)); }
  template <std::integral I>
  Real& operator-=(I o) { return add_si(-static_cast<long>(o)); }
  template <std::integral I>
  Real& operator*=(I o) { return mul_si(static_cast<long>(o)); }
  template <std::integral I>
  Real& operator/=(I o) { return div_si(static_cast<long>(o)); }
  Real& operator*=(double o) { return mul_d(o); }

 private:
  void init(Precision bits);

  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

Real operator+(const Real& a, double b);
Real operator-(const Real& a, double b);
Real operator*(const Real& a, double b);
Real operator/(const Real& a, double b);
Real operator+(double a, const Real& b);
Real operator-(double a, const Real& b);
Real operator*(double a, const Real& b);
Real operator/(double a, const Real& b);

Real si_sub(long a, const Real& b);
Real si_div(long a, const Real& b);

template <std::integral I>
Real operator+(Real a, I b) { return a += b; }
template <std::integral I>
Real operator-(Real a, I b) { return a -= b; }
template <std::integral I>
Real operator*(Real a, I b) { return a *= b; }
template <std::integral I>
Real operator/(Real a, I b) { return a /= b; }
template <std::integral I>
Real operator+(I a, Real b) { return b += a; }
template <std::integral I>
Real operator-(I a, const Real& b) { return si_sub(static_cast<long>(a), b); }
template <std::integral I>
Real operator*(I a, Real b) { return b *= a; }
template <std::integral I>
Real operator/(I a, const Real& b) { return si_div(static_cast<long>(a), b); }

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, double b);
std::partial_ordering operator<=>(const Real& a, double b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real expm1(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long k);
Real sin(const Real& x);
Real cos(const Real& x);
Real asin(const Real& x);
Real acos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// x * 2^k, exact.
Real ldexp(const Real& x, long k);
/// 10^k rounded to `bits`.
Real pow10(long k, Precision bits);

Real const_pi(Precision bits);
Real const_log2(Precision bits);
Real const_euler(Precision bits);

}  // namespace fhlab

#endif  // FHLAB_REAL_HPP_
