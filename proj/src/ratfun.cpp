#include "curvecount/ratfun.hpp"

#include <utility>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace poly {

namespace {

std::int64_t degree(const LaurentPoly& p) { return p.max_exponent().value_or(-1); }

void require_polynomial(const LaurentPoly& p) {
  if (auto m = p.min_exponent(); m && *m < 0) {
    throw DomainError("expected a polynomial, got " + p.str());
  }
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                           const LaurentPoly& b) {
  require_polynomial(a);
  require_polynomial(b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const std::int64_t db = degree(b);
  const Rational lead = b.coeff(db);
  LaurentPoly quotient;
  LaurentPoly rem = a;
  while (!rem.is_zero() && degree(rem) >= db) {
    const std::int64_t shift = degree(rem) - db;
    const Rational c = rem.coeff(degree(rem)) / lead;
    quotient.add_term(shift, c);
    rem -= b.shifted(shift) * c;
  }
  return {std::move(quotient), std::move(rem)};
}

LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.coeff(degree(a)));
}

}  // namespace poly

RationalFunction::RationalFunction(const Rational& c) : num_(c) {}

RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  const std::int64_t num_shift = *num_.min_exponent();
  const std::int64_t den_shift = *den_.min_exponent();
  LaurentPoly n = num_.shifted(-num_shift);
  LaurentPoly d = den_.shifted(-den_shift);
  const LaurentPoly g = poly::gcd(n, d);
  if (g.max_exponent().value_or(0) > 0) {
    n = poly::divmod(n, g).first;
    d = poly::divmod(d, g).first;
  }
  const Rational scale = Rational(1) / d.coeff(0);
  num_ = n.shifted(num_shift - den_shift) * scale;
  den_ = d * scale;
}

RationalFunction RationalFunction::reflected() const {
  return RationalFunction(num_.reflected(), den_.reflected());
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d.is_zero()) throw DomainError("rational function has a pole at " + x.str());
  return num_.evaluate(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_ == LaurentPoly(Rational(1))) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace curvecount
