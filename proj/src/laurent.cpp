#include "curvecount/laurent.hpp"

#include <utility>

#include "curvecount/errors.hpp"

namespace curvecount {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

LaurentPoly LaurentPoly::monomial(const Rational& c, std::int64_t e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

Rational LaurentPoly::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentPoly::add_term(std::int64_t e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<std::int64_t> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<std::int64_t> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::truncated(std::int64_t lo, std::int64_t hi) const {
  LaurentPoly r;
  for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi;
       ++it) {
    r.terms_.emplace_hint(r.terms_.end(), *it);
  }
  return r;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (const auto& [e, c] : terms_) acc += c * pow(x, e);
  return acc;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly pow(const LaurentPoly& a, int e) {
  if (e < 0) throw DomainError("LaurentPoly: negative power");
  LaurentPoly result(Rational(1));
  LaurentPoly base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

SymmetricLaurentPoly::SymmetricLaurentPoly(LaurentPoly poly)
    : poly_(std::move(poly)) {
  for (const auto& [e, c] : poly_.terms()) {
    if (poly_.coeff(-e) != c) {
      throw DomainError("polynomial is not invariant under q <-> 1/q: " +
                        poly_.str());
    }
  }
}

}  // namespace curvecount
