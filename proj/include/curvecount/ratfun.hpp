#pragma once

#include <string>

#include "curvecount/laurent.hpp"

namespace curvecount {

/// Rational function in one variable, kept in the canonical form
///   num / den,  den a polynomial with den(0) = 1,  gcd(num, den) = 1,
/// where num may carry negative exponents. Equal functions therefore have
/// identical representations.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly num);    // NOLINT(google-explicit-constructor)
  /// Throws DomainError for a zero denominator.
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// f(q) -> f(1/q).
  RationalFunction reflected() const;

  /// Value at a point; throws DomainError at a pole.
  Rational evaluate(const Rational& x) const;

  std::string str(const std::string& var = "q") const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  friend bool operator==(const RationalFunction&,
                         const RationalFunction&) = default;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_{Rational(1)};
};

using RationalFunctionQ = RationalFunction;
using RationalFunctionT = RationalFunction;

/// Exact polynomial helpers on non-negative-exponent LaurentPoly values.
namespace poly {
/// Quotient and remainder of a by b (b != 0).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                           const LaurentPoly& b);
/// Monic greatest common divisor.
LaurentPoly gcd(LaurentPoly a, LaurentPoly b);
}  // namespace poly

}  // namespace curvecount
