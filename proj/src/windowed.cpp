#include "curvecount/windowed.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

std::string bound_str(std::int64_t v) {
  return v >= kUnbounded ? std::string("inf") : std::to_string(v);
}

[[noreturn]] void underflow(std::int64_t lo, std::int64_t hi) {
  throw WindowError("window underflow: empty window [" + bound_str(lo) + "," +
                    bound_str(hi) + "]");
}

}  // namespace

std::int64_t window_add(std::int64_t a, std::int64_t b) {
  if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
  return std::min(a + b, kUnbounded);
}

WindowedLaurent::WindowedLaurent(LaurentPoly coeffs, std::int64_t lo,
                                 std::int64_t hi, bool exact_below)
    : coeffs_(std::move(coeffs)),
      lo_(lo),
      hi_(std::min(hi, kUnbounded)),
      exact_below_(exact_below) {
  if (hi_ < lo_) underflow(lo_, hi_);
  if (auto m = coeffs_.min_exponent(); m && *m < lo_) {
    throw DomainError("coefficient at q^" + std::to_string(*m) +
                      " lies below the window");
  }
  if (auto m = coeffs_.max_exponent(); m && *m > hi_) {
    throw DomainError("coefficient at q^" + std::to_string(*m) +
                      " lies above the window");
  }
  // A fully known polynomial has one canonical form.
  if (exact_below_ && hi_ == kUnbounded) lo_ = coeffs_.min_exponent().value_or(0);
}

WindowedLaurent WindowedLaurent::exact(LaurentPoly poly) {
  const std::int64_t lo = poly.min_exponent().value_or(0);
  return WindowedLaurent(std::move(poly), lo, kUnbounded, true);
}

WindowedLaurent WindowedLaurent::truncated(const LaurentPoly& poly,
                                           std::int64_t lo, std::int64_t hi,
                                           bool exact_below) {
  return WindowedLaurent(poly.truncated(lo, hi), lo, hi, exact_below);
}

bool WindowedLaurent::known(std::int64_t n) const {
  return n <= hi_ && (n >= lo_ || exact_below_);
}

Rational WindowedLaurent::coeff(std::int64_t n) const {
  if (!known(n)) {
    throw WindowError("window underflow: requested [" + std::to_string(n) +
                      "," + std::to_string(n) + "], valid [" +
                      bound_str(lo_) +
                      "," + bound_str(hi_) + "]");
  }
  return coeffs_.coeff(n);
}

std::int64_t WindowedLaurent::effective_lo() const {
  if (!exact_below_) return lo_;
  if (auto m = coeffs_.min_exponent()) return *m;
  return window_add(hi_, 1);
}

WindowedLaurent WindowedLaurent::restricted(std::int64_t lo,
                                            std::int64_t hi) const {
  const std::int64_t new_hi = std::min(hi_, hi);
  const std::int64_t new_lo = (lo < lo_ && !exact_below_) ? lo_ : lo;
  if (new_hi < new_lo) {
    throw WindowError("window underflow: requested [" + bound_str(lo) + "," +
                      bound_str(hi) + "], valid [" + bound_str(lo_) + "," +
                      bound_str(hi_) + "]");
  }
  bool still_exact = exact_below_;
  if (auto m = coeffs_.min_exponent(); m && *m < new_lo) still_exact = false;
  return WindowedLaurent(coeffs_.truncated(new_lo, new_hi), new_lo, new_hi,
                         still_exact);
}

bool WindowedLaurent::agrees_with(const WindowedLaurent& other) const {
  std::set<std::int64_t> exps;
  for (const auto& [e, c] : coeffs_.terms()) exps.insert(e);
  for (const auto& [e, c] : other.coeffs_.terms()) exps.insert(e);
  for (std::int64_t e : exps) {
    if (known(e) && other.known(e) && coeffs_.coeff(e) != other.coeffs_.coeff(e)) {
      return false;
    }
  }
  return true;
}

WindowedLaurent WindowedLaurent::operator-() const {
  WindowedLaurent r = *this;
  r.coeffs_ = -coeffs_;
  return r;
}

WindowedLaurent& WindowedLaurent::operator*=(const Rational& s) {
  coeffs_ *= s;
  return *this;
}

namespace {

WindowedLaurent combine(const WindowedLaurent& a, const WindowedLaurent& b,
                        const Rational& sign) {
  const bool exact = a.exact_below() && b.exact_below();
  std::int64_t lo;
  if (exact) {
    lo = std::min(a.lo(), b.lo());
  } else if (a.exact_below()) {
    lo = b.lo();
  } else if (b.exact_below()) {
    lo = a.lo();
  } else {
    lo = std::max(a.lo(), b.lo());
  }
  const std::int64_t hi = std::min(a.hi(), b.hi());
  if (hi < lo) underflow(lo, hi);
  LaurentPoly sum = a.coeffs().truncated(lo, hi);
  sum += b.coeffs().truncated(lo, hi) * sign;
  return WindowedLaurent(std::move(sum), lo, hi, exact);
}

}  // namespace

WindowedLaurent operator+(const WindowedLaurent& a, const WindowedLaurent& b) {
  return combine(a, b, Rational(1));
}

WindowedLaurent operator-(const WindowedLaurent& a, const WindowedLaurent& b) {
  return combine(a, b, Rational(-1));
}

}  // namespace curvecount
