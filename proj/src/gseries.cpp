#include "curvecount/gseries.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "curvecount/errors.hpp"
#include "curvecount/exactnum.hpp"
#include "curvecount/qseries.hpp"

namespace curvecount {

namespace {

void enumerate(const std::vector<int>& weights, int budget, std::size_t index,
               CurveClass& current, std::vector<CurveClass>& out) {
  if (index == weights.size()) {
    out.push_back(current);
    return;
  }
  for (int d = 0; d * weights[index] <= budget; ++d) {
    current[index] = d;
    enumerate(weights, budget - d * weights[index], index + 1, current, out);
  }
  current[index] = 0;
}

CurveClass add_classes(const CurveClass& a, const CurveClass& b) {
  CurveClass r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool class_leq(const CurveClass& a, const CurveClass& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

CurveClass sub_classes(const CurveClass& a, const CurveClass& b) {
  CurveClass r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

void require_same_grid(const GradedSeries& a, const GradedSeries& b) {
  if (!(a.grid() == b.grid())) throw DomainError("graded series live on different grids");
}

void accumulate(std::optional<WindowedLaurent>& acc, const WindowedLaurent& x) {
  acc = acc ? *acc + x : x;
}

}  // namespace

bool is_zero_class(const CurveClass& beta) {
  return std::all_of(beta.begin(), beta.end(), [](int d) { return d == 0; });
}

ClassGrid::ClassGrid(int rank, std::vector<int> weights, int cutoff)
    : rank_(rank), weights_(std::move(weights)), cutoff_(cutoff) {
  if (rank_ < 1) throw DomainError("class grid rank must be positive");
  if (static_cast<int>(weights_.size()) != rank_) {
    throw DomainError("class grid needs one weight per coordinate");
  }
  for (int w : weights_) {
    if (w < 1) throw DomainError("class grid weights must be positive");
  }
  if (cutoff_ < 0) throw DomainError("class grid cutoff must be non-negative");
  CurveClass current(static_cast<std::size_t>(rank_), 0);
  enumerate(weights_, cutoff_, 0, current, classes_);
  std::stable_sort(classes_.begin(), classes_.end(),
                   [this](const CurveClass& a, const CurveClass& b) {
                     const int da = degree(a);
                     const int db = degree(b);
                     return da != db ? da < db : a < b;
                   });
}

int ClassGrid::degree(const CurveClass& beta) const {
  int d = 0;
  for (int i = 0; i < rank_; ++i) d += weights_[i] * beta[i];
  return d;
}

bool ClassGrid::in_range(const CurveClass& beta) const {
  if (static_cast<int>(beta.size()) != rank_) return false;
  for (int d : beta) {
    if (d < 0) return false;
  }
  return degree(beta) <= cutoff_;
}

GradedSeries GradedSeries::one(const ClassGrid& grid) {
  GradedSeries s(grid);
  s.set(grid.zero(), WindowedLaurent::exact(LaurentPoly(Rational(1))));
  return s;
}

WindowedLaurent GradedSeries::term(const CurveClass& beta) const {
  if (!grid_.in_range(beta)) throw DomainError("curve class out of range");
  auto it = terms_.find(beta);
  return it == terms_.end() ? WindowedLaurent() : it->second;
}

void GradedSeries::set(const CurveClass& beta, WindowedLaurent layer) {
  if (!grid_.in_range(beta)) throw DomainError("curve class out of range");
  if (layer == WindowedLaurent()) {
    terms_.erase(beta);
    return;
  }
  terms_.insert_or_assign(beta, std::move(layer));
}

GradedSeries GradedSeries::restricted(std::int64_t lo, std::int64_t hi) const {
  GradedSeries out(grid_);
  for (const auto& [beta, layer] : terms_) out.terms_.emplace(beta, layer.restricted(lo, hi));
  return out;
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  require_same_grid(a, b);
  GradedSeries out = a;
  for (const auto& [beta, layer] : b.terms_) {
    auto it = out.terms_.find(beta);
    if (it == out.terms_.end()) {
      out.terms_.emplace(beta, layer);
    } else {
      it->second = it->second + layer;
    }
  }
  return out;
}

GradedSeries operator*(const GradedSeries& a, const Rational& s) {
  GradedSeries out(a.grid_);
  for (const auto& [beta, layer] : a.terms_) out.set(beta, layer * s);
  return out;
}

GradedSeries graded_mul(const GradedSeries& a, const GradedSeries& b) {
  require_same_grid(a, b);
  const ClassGrid& grid = a.grid();
  std::map<CurveClass, std::optional<WindowedLaurent>> acc;
  for (const auto& [ba, la] : a.terms()) {
    for (const auto& [bb, lb] : b.terms()) {
      CurveClass beta = add_classes(ba, bb);
      if (!grid.in_range(beta)) continue;
      accumulate(acc[beta], mul_windowed(la, lb));
    }
  }
  GradedSeries out(grid);
  for (auto& [beta, layer] : acc) out.set(beta, std::move(*layer));
  return out;
}

GradedSeries graded_exp(const GradedSeries& a) {
  const ClassGrid& grid = a.grid();
  if (a.has_term(grid.zero())) {
    throw DomainError("graded_exp: argument has a beta = 0 term");
  }
  // deg(beta) E_beta = sum_{0 < gamma <= beta} deg(gamma) a_gamma E_{beta - gamma}
  GradedSeries out = GradedSeries::one(grid);
  for (const CurveClass& beta : grid.classes()) {
    if (is_zero_class(beta)) continue;
    std::optional<WindowedLaurent> acc;
    for (const auto& [gamma, layer] : a.terms()) {
      if (!class_leq(gamma, beta)) continue;
      const CurveClass rest = sub_classes(beta, gamma);
      if (!out.has_term(rest)) continue;
      accumulate(acc, mul_windowed(layer, out.term(rest)) * Rational(grid.degree(gamma)));
    }
    if (acc) out.set(beta, *acc * (Rational(1) / Rational(grid.degree(beta))));
  }
  return out;
}

GradedSeries graded_log(const GradedSeries& a) {
  const ClassGrid& grid = a.grid();
  const WindowedLaurent unit = a.term(grid.zero());
  if (!unit.exact_below() || unit.coeffs() != LaurentPoly(Rational(1))) {
    throw DomainError("graded_log: beta = 0 layer is not exactly 1");
  }
  // A bounded unit layer is 1 + O(q^{hi+1}); carry that through the windows.
  GradedSeries normalized(grid);
  for (const auto& [beta, layer] : a.terms()) {
    if (is_zero_class(beta)) continue;
    normalized.set(beta, unit.bounded() ? mul_windowed(layer, unit) : layer);
  }
  // deg(beta) l_beta = deg(beta) A_beta - sum_{0 < gamma < beta} deg(gamma) l_gamma A_{beta - gamma}
  GradedSeries out(grid);
  for (const CurveClass& beta : grid.classes()) {
    if (is_zero_class(beta)) continue;
    std::optional<WindowedLaurent> acc;
    if (normalized.has_term(beta)) acc = normalized.term(beta);
    std::optional<WindowedLaurent> correction;
    for (const auto& [gamma, layer] : out.terms()) {
      if (gamma == beta || !class_leq(gamma, beta)) continue;
      const CurveClass rest = sub_classes(beta, gamma);
      if (!normalized.has_term(rest)) continue;
      accumulate(correction,
                 mul_windowed(layer, normalized.term(rest)) * Rational(grid.degree(gamma)));
    }
    if (correction) {
      accumulate(acc, -(*correction * (Rational(1) / Rational(grid.degree(beta)))));
    }
    if (acc) out.set(beta, *acc);
  }
  return out;
}

GradedSeries log_factor(const ClassGrid& grid, const ProductFactor& factor) {
  if (static_cast<int>(factor.beta.size()) != grid.rank() ||
      std::any_of(factor.beta.begin(), factor.beta.end(), [](int d) { return d < 0; })) {
    throw DomainError("product factor class is not an effective class of this grid");
  }
  if (is_zero_class(factor.beta)) throw DomainError("product factor with beta = 0");
  GradedSeries out(grid);
  for (std::int64_t m = 1;; ++m) {
    const CurveClass beta = scale_class(factor.beta, m);
    if (!grid.in_range(beta)) break;
    Rational c = -factor.exponent / Rational(m);
    if (factor.sign == SignMode::kSigned) c *= sign_power(factor.j * m);
    out.set(beta, WindowedLaurent::exact(LaurentPoly::monomial(c, factor.j * m)));
  }
  return out;
}

GradedSeries product_family(const ClassGrid& grid,
                            const std::vector<ProductFactor>& factors) {
  GradedSeries log_sum(grid);
  for (const ProductFactor& f : factors) log_sum = log_sum + log_factor(grid, f);
  return graded_exp(log_sum);
}

std::vector<std::int64_t> class_divisors(const CurveClass& beta) {
  if (is_zero_class(beta)) throw DomainError("class_divisors: beta = 0");
  std::int64_t g = 0;
  for (int d : beta) g = std::gcd(g, static_cast<std::int64_t>(d));
  return divisors(g);
}

CurveClass divide_class(const CurveClass& beta, std::int64_t a) {
  CurveClass r(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] % a != 0) throw DomainError("divide_class: " + std::to_string(a) + " does not divide the class");
    r[i] = static_cast<int>(beta[i] / a);
  }
  return r;
}

CurveClass scale_class(const CurveClass& beta, std::int64_t a) {
  CurveClass r(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) r[i] = static_cast<int>(beta[i] * a);
  return r;
}

}  // namespace curvecount
