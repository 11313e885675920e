#ifndef FHLAB_PRECISION_HPP_
#define FHLAB_PRECISION_HPP_

#include <stdexcept>
#include <string>

#include "fhlab/real.hpp"

namespace fhlab {

/// Working-precision policy shared by every extended-precision routine.
///
/// `digits` is the nominal precision of accepted results, `guard_digits` is
/// carried on top of it internally, and `target_tol` is the relative accuracy
/// that two independent precision passes must reach before a result is
/// accepted. Invariants: digits >= 30, guard_digits >= 10,
/// target_tol >= 10^-(digits - guard_digits).
struct PrecisionContext {
  int digits = 40;
  int guard_digits = 10;
  long double target_tol = 1e-30L;

  /// Context with the default tolerance 10^-(digits - guard).
  static PrecisionContext with_digits(int digits, int guard_digits = 10);

  /// Throws InvalidInput when an invariant is violated.
  void validate() const;

  /// Bits used for arithmetic: digits + guard_digits decimal digits.
  Precision working_bits() const { return bits_for_digits(digits + guard_digits); }
  /// target_tol as an extended-precision value at `bits`.
  Real tolerance(Precision bits) const;
  /// Same tolerance policy, different nominal digits.
  PrecisionContext rescaled(int new_digits) const;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (CLI exit code 2).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Weight evaluated exactly at a point of negative exponent.
class SingularPoint : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Refinement or precision escalation exhausted (CLI exit code 3).
class PrecisionUnreachable : public Error {
 public:
  PrecisionUnreachable(const std::string& what, int level_reached)
      : Error(what), level_(level_reached) {}
  int level_reached() const { return level_; }

 private:
  int level_;
};

/// Non-positive pivot at every precision tried.
class NumericallySingular : public PrecisionUnreachable {
 public:
  using PrecisionUnreachable::PrecisionUnreachable;
};

/// Two routes to the same quantity disagree.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace fhlab

#endif  // FHLAB_PRECISION_HPP_
