#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "curvecount/rational.hpp"

namespace curvecount {

/// Finite Laurent polynomial with exact rational coefficients, stored
/// sparsely by exponent. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(const Rational& c, std::int64_t e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(std::int64_t e) const;
  void add_term(std::int64_t e, const Rational& c);

  /// Lowest / highest exponent with a nonzero coefficient.
  std::optional<std::int64_t> min_exponent() const;
  std::optional<std::int64_t> max_exponent() const;

  /// f(q) -> f(1/q).
  LaurentPoly reflected() const;
  /// f(q) -> q^k f(q).
  LaurentPoly shifted(std::int64_t k) const;
  /// Keep exponents in [lo, hi].
  LaurentPoly truncated(std::int64_t lo, std::int64_t hi) const;

  Rational evaluate(const Rational& x) const;

  /// Human-readable form in the given variable, e.g. "q^-1 + 2 + q".
  std::string str(const std::string& var = "q") const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) {
    return a *= s;
  }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) {
    return a *= s;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// a^e, e >= 0.
  friend LaurentPoly pow(const LaurentPoly& a, int e);

 private:
  Terms terms_;
};

/// Laurent polynomial invariant under q <-> 1/q. Construction checks the
/// symmetry and throws DomainError when it fails.
class SymmetricLaurentPoly {
 public:
  SymmetricLaurentPoly() = default;
  explicit SymmetricLaurentPoly(LaurentPoly poly);

  const LaurentPoly& poly() const { return poly_; }
  Rational coeff(std::int64_t e) const { return poly_.coeff(e); }
  bool is_zero() const { return poly_.is_zero(); }

  friend bool operator==(const SymmetricLaurentPoly&,
                         const SymmetricLaurentPoly&) = default;

 private:
  LaurentPoly poly_;
};

}  // namespace curvecount
