#include "fhlab/precision.hpp"

#include <cmath>

namespace fhlab {

PrecisionContext PrecisionContext::with_digits(int digits, int guard_digits) {
  PrecisionContext ctx;
  ctx.digits = digits;
  ctx.guard_digits = guard_digits;
  ctx.target_tol = std::pow(10.0L, -static_cast<long double>(digits - guard_digits));
  return ctx;
}

void PrecisionContext::validate() const {
  if (digits < 30) throw InvalidInput("precision: digits must be >= 30");
  if (guard_digits < 10) throw InvalidInput("precision: guard_digits must be >= 10");
  long double floor_tol = std::pow(10.0L, -static_cast<long double>(digits - guard_digits));
  // Small slack for the decimal round trip of the bound itself.
  if (!(target_tol >= floor_tol * (1 - 1e-12L))) {
    throw InvalidInput("precision: target_tol below 10^-(digits - guard_digits)");
  }
}

Real PrecisionContext::tolerance(Precision bits) const {
  Real t(target_tol, bits);
  return t;
}

PrecisionContext PrecisionContext::rescaled(int new_digits) const {
  return with_digits(new_digits, guard_digits);
}

}  // namespace fhlab
