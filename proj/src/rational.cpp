#include "curvecount/rational.hpp"

#include <cctype>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!is_decimal(num_text) || !is_decimal(den_text)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw DomainError("not an integer: " + str());
  return value_.get_num();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& a, long e) {
  if (e < 0) {
    if (a.is_zero()) throw DomainError("zero to a negative power");
    return Rational(1) / pow(a, -e);
  }
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), a.value_.get_num_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), a.value_.get_den_mpz_t(),
             static_cast<unsigned long>(e));
  return Rational(num, den);
}

GaussianRational operator/(const GaussianRational& a,
                           const GaussianRational& b) {
  const Rational n = b.norm();
  if (n.is_zero()) throw DomainError("gaussian division by zero");
  const GaussianRational p = a * b.conj();
  return {p.re / n, p.im / n};
}

}  // namespace curvecount
