#include <algorithm>
#include <string>
#include <vector>

#include "curvecount/errors.hpp"
#include "curvecount/exactnum.hpp"
#include "curvecount/invariants.hpp"
#include "curvecount/ratrec.hpp"

namespace curvecount {

namespace {

Rational factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

using Dense = std::vector<Rational>;

Dense dense_mul(const Dense& a, const Dense& b, std::size_t length) {
  Dense r(length);
  for (std::size_t i = 0; i < std::min(a.size(), length); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < length; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Dense dense_inverse(const Dense& a, std::size_t length) {
  Dense r(length);
  r[0] = Rational(1) / a[0];
  for (std::size_t n = 1; n < length; ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * r[n - k];
    r[n] = -acc / a[0];
  }
  return r;
}

// (2 sin(x/2))^{2g-2} = x^{2g-2} s(x)^{g-1} with
// s(x) = (2 - 2 cos x) / x^2 = sum_m 2 (-1)^m x^{2m} / (2m+2)!.
// Returns the coefficients of s(x)^{g-1} through x^{length-1}.
Dense sine_power(int g, std::size_t length) {
  Dense s(length);
  for (std::size_t m = 0; 2 * m < length; ++m) {
    s[2 * m] = Rational(2) * sign_power(static_cast<std::int64_t>(m)) /
               factorial(static_cast<int>(2 * m + 2));
  }
  if (g == 0) return dense_inverse(s, length);
  Dense r(length);
  r[0] = 1;
  for (int i = 0; i < g - 1; ++i) r = dense_mul(r, s, length);
  return r;
}

// e^{i e lambda} (-1)^e summed against the coefficients of p.
std::vector<GaussianRational> at_minus_exp(const LaurentPoly& p, std::size_t length) {
  std::vector<GaussianRational> out(length);
  for (const auto& [e, c] : p.terms()) {
    Rational power(1);  // e^m / m!
    for (std::size_t m = 0; m < length; ++m) {
      if (m > 0) power = power * Rational(e) / Rational(static_cast<long>(m));
      const Rational v = c * sign_power(e) * power;
      switch (m % 4) {
        case 0: out[m].re += v; break;
        case 1: out[m].im += v; break;
        case 2: out[m].re -= v; break;
        default: out[m].im -= v; break;
      }
    }
  }
  return out;
}

std::string class_str(const CurveClass& beta) {
  std::string s = "(";
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(beta[i]);
  }
  return s + ")";
}

}  // namespace

std::map<CurveClass, WindowedLaurent> gv_to_gw(const GVTable& table, int lambda_order,
                                               const ClassGrid& grid) {
  if (lambda_order < -2) {
    throw WindowError("window underflow: lambda order " + std::to_string(lambda_order) +
                      " cannot hold the genus-zero lambda^-2 pole");
  }
  std::map<CurveClass, LaurentPoly> layers;
  for (const auto& [key, n] : table.entries) {
    if (is_zero_class(key.beta) || !grid.in_range(key.beta)) {
      throw DomainError("GV table entry at class " + class_str(key.beta) +
                        " is not a nonzero class of the grid");
    }
    const int lead = 2 * key.genus - 2;
    if (lead > lambda_order) continue;
    const Dense shape = sine_power(key.genus, static_cast<std::size_t>(lambda_order - lead + 1));
    for (std::int64_t k = 1;; ++k) {
      const CurveClass beta = scale_class(key.beta, k);
      if (!grid.in_range(beta)) break;
      // (n/k) (2 sin(k lambda / 2))^{2g-2}: coefficient of x^e picks up k^e.
      LaurentPoly& layer = layers[beta];
      for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i].is_zero()) continue;
        const std::int64_t e = lead + static_cast<std::int64_t>(i);
        layer.add_term(e, Rational(n) / Rational(k) * pow(Rational(k), e) * shape[i]);
      }
    }
  }
  std::map<CurveClass, WindowedLaurent> out;
  for (auto& [beta, poly] : layers) {
    out.emplace(beta, WindowedLaurent(std::move(poly), -2, lambda_order, true));
  }
  return out;
}

Rational gw_local_curve(int g, std::int64_t d) {
  if (d <= 0) throw DomainError("gw_local_curve: degree must be positive");
  if (g < 0) throw DomainError("gw_local_curve: genus must be non-negative");
  if (g == 0) return Rational(1) / pow(Rational(d), 3);
  if (g == 1) return Rational(1) / Rational(12 * d);
  Rational b = bernoulli(2 * g);
  if (b.sign() < 0) b = -b;
  return b * pow(Rational(d), 2 * g - 3) / (Rational(2 * g) * factorial(2 * g - 2));
}

std::map<std::int64_t, GaussianRational> expand_at_minus_exp(const RationalFunction& f,
                                                             int order) {
  const std::int64_t den_degree = f.den().max_exponent().value_or(0);
  const std::int64_t length = std::max<std::int64_t>(order + 2 * den_degree + 3, 1);
  const auto num = at_minus_exp(f.num(), static_cast<std::size_t>(length));
  const auto den = at_minus_exp(f.den(), static_cast<std::size_t>(length));
  std::int64_t v = 0;
  while (v < length && den[v].is_zero()) ++v;
  if (v == length) throw DomainError("denominator vanishes identically at q = -e^{i lambda}");
  // f = lambda^{-v} num / (den / lambda^v); the quotient is valid through
  // index length - v - 1.
  const std::int64_t valid = length - v;
  std::vector<GaussianRational> quotient(static_cast<std::size_t>(valid));
  for (std::int64_t m = 0; m < valid; ++m) {
    GaussianRational acc = num[m];
    for (std::int64_t j = 1; j <= m; ++j) acc -= den[v + j] * quotient[m - j];
    quotient[m] = acc / den[v];
  }
  std::map<std::int64_t, GaussianRational> out;
  for (std::int64_t m = 0; m < valid && m - v <= order; ++m) {
    if (!quotient[m].is_zero()) out.emplace(m - v, quotient[m]);
  }
  return out;
}

GwDtReport diagnose_gw_dt(const std::map<CurveClass, RationalFunction>& dt_prime,
                          const std::map<CurveClass, WindowedLaurent>& gw,
                          const ClassGrid& grid, int lambda_order) {
  for (const auto& [beta, f] : dt_prime) {
    if (!check_q_symmetry(f)) {
      return {false, "symmetry violation: DT' at class " + class_str(beta) +
                         " is not invariant under q <-> 1/q"};
    }
  }
  GradedSeries gw_series(grid);
  for (const auto& [beta, layer] : gw) gw_series.set(beta, layer);
  const GradedSeries exp_gw = graded_exp(gw_series);

  for (const CurveClass& beta : grid.classes()) {
    if (is_zero_class(beta)) continue;
    auto it = dt_prime.find(beta);
    const RationalFunction f = it == dt_prime.end() ? RationalFunction() : it->second;
    const auto expansion = expand_at_minus_exp(f, lambda_order);
    const WindowedLaurent side = exp_gw.term(beta);
    if (side.hi() < lambda_order) {
      throw WindowError("window underflow: requested [" + std::to_string(side.lo()) + "," +
                        std::to_string(lambda_order) + "], valid [" +
                        std::to_string(side.lo()) + "," + std::to_string(side.hi()) + "]");
    }
    std::int64_t lo = side.effective_lo();
    if (!expansion.empty()) lo = std::min(lo, expansion.begin()->first);
    for (std::int64_t e = std::min<std::int64_t>(lo, lambda_order); e <= lambda_order; ++e) {
      auto x = expansion.find(e);
      const GaussianRational value = x == expansion.end() ? GaussianRational{} : x->second;
      if (!value.im.is_zero()) {
        return {false, "symmetry violation: imaginary part " + value.im.str() + " at lambda^" +
                           std::to_string(e) + " for class " + class_str(beta)};
      }
      if (value.re != side.coeff(e)) {
        return {false, "mismatch at lambda^" + std::to_string(e) + " for class " +
                           class_str(beta) + ": DT' gives " + value.re.str() + ", exp GW gives " +
                           side.coeff(e).str()};
      }
    }
  }
  return {true, ""};
}

bool check_gw_dt(const std::map<CurveClass, RationalFunction>& dt_prime,
                 const std::map<CurveClass, WindowedLaurent>& gw, const ClassGrid& grid,
                 int lambda_order) {
  return diagnose_gw_dt(dt_prime, gw, grid, lambda_order).ok;
}

}  // namespace curvecount
