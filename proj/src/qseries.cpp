#include "curvecount/qseries.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "curvecount/errors.hpp"
#include "curvecount/exactnum.hpp"

namespace curvecount {

WindowedLaurent mul_windowed(const WindowedLaurent& a, const WindowedLaurent& b) {
  const std::int64_t lo = a.lo() + b.lo();
  const std::int64_t hi = std::min(window_add(a.hi(), b.effective_lo()),
                                   window_add(b.hi(), a.effective_lo()));
  if (hi < lo) {
    throw WindowError("window underflow: product window [" + std::to_string(lo) +
                      "," + std::to_string(hi) + "] is empty");
  }
  LaurentPoly product;
  for (const auto& [ea, ca] : a.coeffs().terms()) {
    for (const auto& [eb, cb] : b.coeffs().terms()) {
      const std::int64_t e = ea + eb;
      if (e > hi) break;
      if (e >= lo) product.add_term(e, ca * cb);
    }
  }
  return WindowedLaurent(std::move(product), lo, hi,
                         a.exact_below() && b.exact_below());
}

WindowedLaurent invert_windowed(const WindowedLaurent& a) {
  if (!a.exact_below() || a.coeffs().is_zero()) {
    throw DomainError("series is not invertible: lowest coefficient unknown or zero");
  }
  const std::int64_t v = *a.coeffs().min_exponent();
  const Rational lead = a.coeffs().coeff(v);
  if (!a.bounded()) {
    // A monomial has an exact inverse; anything longer needs a window.
    if (a.coeffs().terms().size() == 1) {
      return WindowedLaurent::exact(LaurentPoly::monomial(Rational(1) / lead, -v));
    }
    throw DomainError("inverse of a polynomial needs an explicit window");
  }
  // a = q^v (lead + ...), known through q^{hi}; inverse known through q^{hi-2v}.
  const std::int64_t length = a.hi() - v + 1;
  std::vector<Rational> src(static_cast<std::size_t>(length));
  for (const auto& [e, c] : a.coeffs().terms()) src[static_cast<std::size_t>(e - v)] = c;
  std::vector<Rational> inv(static_cast<std::size_t>(length));
  inv[0] = Rational(1) / lead;
  for (std::int64_t n = 1; n < length; ++n) {
    Rational acc;
    for (std::int64_t k = 1; k <= n; ++k) {
      if (!src[k].is_zero()) acc += src[k] * inv[n - k];
    }
    inv[n] = -acc / lead;
  }
  LaurentPoly out;
  for (std::int64_t n = 0; n < length; ++n) out.add_term(n - v, inv[n]);
  return WindowedLaurent(std::move(out), -v, a.hi() - 2 * v, true);
}

WindowedLaurent expand_ratfun(const RationalFunction& f, std::int64_t lo,
                              std::int64_t hi) {
  if (hi < lo) {
    throw DomainError("expand_ratfun: empty range [" + std::to_string(lo) + "," +
                      std::to_string(hi) + "]");
  }
  if (f.is_zero()) return WindowedLaurent(LaurentPoly(), lo, hi, true);
  // Canonical form: den is a polynomial with den(0) = 1.
  const LaurentPoly& num = f.num();
  const LaurentPoly& den = f.den();
  const std::int64_t v = *num.min_exponent();
  const std::int64_t window_lo = std::min(lo, v);
  LaurentPoly out;
  if (hi >= v) {
    const std::int64_t length = hi - v + 1;
    std::vector<Rational> n(static_cast<std::size_t>(length));
    for (const auto& [e, c] : num.terms()) {
      if (e - v < length) n[static_cast<std::size_t>(e - v)] = c;
    }
    std::vector<Rational> s(static_cast<std::size_t>(length));
    for (std::int64_t k = 0; k < length; ++k) {
      Rational acc = n[k];
      for (const auto& [e, c] : den.terms()) {
        if (e == 0) continue;
        if (e > k) break;
        acc -= c * s[k - e];
      }
      s[k] = acc;
    }
    for (std::int64_t k = 0; k < length; ++k) out.add_term(k + v, s[k]);
  }
  return WindowedLaurent(std::move(out), window_lo, hi, true);
}

LaurentPoly substitute_signed_power(const LaurentPoly& f, std::int64_t a) {
  if (a < 1) throw DomainError("substitute_signed_power: a must be >= 1");
  LaurentPoly out;
  for (const auto& [m, c] : f.terms()) {
    // (-(-q)^a)^m = (-1)^m (-1)^{am} q^{am}
    out.add_term(a * m, c * sign_power(m * (a + 1)));
  }
  return out;
}

std::pair<WindowedLaurent, SymmetricLaurentPoly> split_symmetric(
    const WindowedLaurent& l) {
  if (!l.exact_below()) {
    throw WindowError("cannot mirror negative support: lower support of the series is unknown");
  }
  const std::int64_t depth = std::max<std::int64_t>(0, -l.effective_lo());
  if (l.hi() < std::max<std::int64_t>(depth, 0)) {
    throw WindowError("cannot mirror negative support: window underflow: requested [" +
                      std::to_string(-depth) + "," + std::to_string(depth) +
                      "], valid [" + std::to_string(l.lo()) + "," +
                      std::to_string(l.hi()) + "]");
  }
  LaurentPoly sym;
  for (const auto& [e, c] : l.coeffs().terms()) {
    if (e > 0) break;
    sym.add_term(e, c);
    if (e < 0) sym.add_term(-e, c);
  }
  LaurentPoly positive;
  for (const auto& [e, c] : l.coeffs().terms()) {
    if (e >= 1) positive.add_term(e, c);
  }
  positive -= sym.truncated(1, kUnbounded);
  // The positive part vanishes at q^0 and below by construction.
  const std::int64_t hi = l.hi();
  return {WindowedLaurent(std::move(positive), std::min<std::int64_t>(1, hi), hi, true),
          SymmetricLaurentPoly(std::move(sym))};
}

SymmetricLaurentPoly f_g(int g) {
  if (g < 1) throw DomainError("f_g is only a Laurent polynomial for g >= 1");
  LaurentPoly p;
  for (int k = 0; k <= 2 * g - 2; ++k) p.add_term(g - 1 - k, Rational(binomial(2 * g - 2, k)));
  return SymmetricLaurentPoly(std::move(p));
}

SymmetricLaurentPoly h_m(int m) {
  if (m < 0) throw DomainError("h_m requires m >= 0");
  if (m == 0) return SymmetricLaurentPoly(LaurentPoly(Rational(1)));
  LaurentPoly p;
  p.add_term(m, 1);
  p.add_term(-m, 1);
  return SymmetricLaurentPoly(std::move(p));
}

std::map<int, Rational> h_decompose(const SymmetricLaurentPoly& s) {
  std::map<int, Rational> out;
  for (const auto& [e, c] : s.poly().terms()) {
    if (e >= 0) out.emplace(static_cast<int>(e), c);
  }
  return out;
}

std::map<int, Rational> fg_decompose(const SymmetricLaurentPoly& s) {
  std::map<int, Rational> out;
  for (const auto& [m, b] : h_decompose(s)) {
    for (int g = 1; g <= m + 1; ++g) {
      const Rational c(c_coefficient(g, m));
      if (c.is_zero()) continue;
      out[g] += b * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace curvecount
