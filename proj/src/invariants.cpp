#include "curvecount/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "curvecount/errors.hpp"
#include "curvecount/exactnum.hpp"
#include "curvecount/qseries.hpp"

namespace curvecount {

namespace {

std::string class_str(const CurveClass& beta) {
  std::string s = "(";
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(beta[i]);
  }
  return s + ")";
}

void require_line(const ClassGrid& grid, const char* what) {
  if (grid.rank() != 1) {
    throw DomainError(std::string(what) + " needs a rank-one class grid");
  }
}

// prod_{k=1}^{order} (1 - x^k)^{-k chi} as a dense vector in x.
std::vector<Rational> macmahon_power(std::int64_t chi, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    const std::int64_t e = -static_cast<std::int64_t>(k) * chi;
    if (e == 0) continue;
    // (1 - x^k)^e = sum_m C(e, m) (-1)^m x^{km}
    std::vector<Rational> next(c.size());
    for (int m = 0; m * k <= order; ++m) {
      const Rational b = Rational(binomial_series(e, m)) * sign_power(m);
      if (b.is_zero()) continue;
      for (int n = 0; n + m * k <= order; ++n) {
        if (!c[n].is_zero()) next[n + m * k] += b * c[n];
      }
    }
    c = std::move(next);
  }
  return c;
}

WindowedLaurent from_dense(const std::vector<Rational>& c) {
  LaurentPoly p;
  for (std::size_t n = 0; n < c.size(); ++n) p.add_term(static_cast<std::int64_t>(n), c[n]);
  return WindowedLaurent(std::move(p), 0, static_cast<std::int64_t>(c.size()) - 1, true);
}

// Caps a layer built from a truncated infinite product at q^hi.
WindowedLaurent cap_above(const WindowedLaurent& layer, std::int64_t hi) {
  return layer.restricted(std::min(layer.lo(), hi), hi);
}

GradedSeries cap_layers(const GradedSeries& s, std::int64_t hi) {
  GradedSeries out(s.grid());
  for (const auto& [beta, layer] : s.terms()) out.set(beta, cap_above(layer, hi));
  return out;
}

GradedSeries single_layer(const ClassGrid& grid, const CurveClass& beta, WindowedLaurent w) {
  GradedSeries s(grid);
  s.set(beta, std::move(w));
  return s;
}

}  // namespace

// ---- tables --------------------------------------------------------------

BigInt GVTable::at(int genus, const CurveClass& beta) const {
  auto it = entries.find(GvKey{genus, beta});
  return it == entries.end() ? BigInt(0) : it->second;
}

void GVTable::set(int genus, const CurveClass& beta, const BigInt& n) {
  if (n == 0) {
    entries.erase(GvKey{genus, beta});
  } else {
    entries.insert_or_assign(GvKey{genus, beta}, n);
  }
}

Rational NTable::at(std::int64_t n, const CurveClass& beta) const {
  auto bound = n_max.find(beta);
  if (bound == n_max.end() || n < 1 || n > bound->second) {
    throw WindowError("window underflow: requested N_{" + std::to_string(n) + "," +
                      class_str(beta) + "}, valid [1," +
                      (bound == n_max.end() ? std::string("0") : std::to_string(bound->second)) +
                      "]");
  }
  auto it = values.find({n, beta});
  return it == values.end() ? Rational() : it->second;
}

std::map<CurveClass, Rational> NTable::genus_zero_layer() const {
  std::map<CurveClass, Rational> out;
  for (const auto& [beta, hi] : n_max) {
    if (hi >= 1) out.emplace(beta, at(1, beta));
  }
  return out;
}

const LaurentPoly& LTable::raw_layer(const CurveClass& beta) const {
  auto it = raw.find(beta);
  if (it == raw.end()) {
    throw DomainError("L table has no entry for class " + class_str(beta));
  }
  return it->second;
}

// ---- degree zero ---------------------------------------------------------

WindowedLaurent macmahon(int order) {
  if (order < 0) throw DomainError("macmahon: order must be >= 0");
  return from_dense(macmahon_power(1, order));
}

WindowedLaurent dt_zero(std::int64_t chi, int order) {
  if (order < 0) throw DomainError("dt_zero: order must be >= 0");
  std::vector<Rational> c = macmahon_power(chi, order);
  for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
  return from_dense(c);
}

Rational n_degree_zero(std::int64_t chi, std::int64_t n) {
  if (n < 1) throw DomainError("n_degree_zero: n must be >= 1");
  Rational s;
  for (std::int64_t k : divisors(n)) s += Rational(1) / Rational(k * k);
  return -Rational(chi) * s;
}

bool check_dt0_identity(std::int64_t chi, int order) {
  if (order < 0) throw DomainError("check_dt0_identity: order must be >= 0");
  // log-side coefficients a_n = (-1)^{n-1} n N_{n,0}; n E_n = sum_k k a_k E_{n-k}.
  std::vector<Rational> a(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) a[n] = sign_power(n - 1) * Rational(n) * n_degree_zero(chi, n);
  std::vector<Rational> e(a.size());
  e[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += Rational(k) * a[k] * e[n - k];
    e[n] = acc / Rational(n);
  }
  const WindowedLaurent rhs = dt_zero(chi, order);
  for (int n = 0; n <= order; ++n) {
    if (e[n] != rhs.coeff(n)) return false;
  }
  return true;
}

// ---- DT / PT series ------------------------------------------------------

GradedSeries reduce_dt(const GradedSeries& dt) {
  const ClassGrid& grid = dt.grid();
  const WindowedLaurent inverse = invert_windowed(dt.term(grid.zero()));
  GradedSeries out = GradedSeries::one(grid);
  for (const auto& [beta, layer] : dt.terms()) {
    if (is_zero_class(beta)) continue;
    out.set(beta, mul_windowed(layer, inverse));
  }
  return out;
}

GradedSeries conifold_dt(std::int64_t chi, const ClassGrid& grid, std::int64_t lo,
                         std::int64_t hi) {
  require_line(grid, "conifold_dt");
  if (hi < 0) throw DomainError("conifold_dt: q-window must reach q^0");
  std::vector<ProductFactor> factors;
  for (std::int64_t k = 1; k <= std::max<std::int64_t>(hi, 1); ++k) {
    factors.push_back({{1}, k, Rational(k), SignMode::kSigned});
  }
  GradedSeries log_sum(grid);
  for (const ProductFactor& f : factors) log_sum = log_sum + log_factor(grid, f);
  const GradedSeries curve_part = graded_exp(cap_layers(log_sum, hi));
  const GradedSeries points =
      single_layer(grid, grid.zero(), dt_zero(chi, static_cast<int>(hi)));
  return graded_mul(points, curve_part).restricted(lo, hi);
}

std::map<CurveClass, RationalFunction> conifold_reduced_ratfuns(int cutoff) {
  if (cutoff < 0) throw DomainError("conifold_reduced_ratfuns: negative cutoff");
  // log DT' = sum_k c_k t^k with c_k = -(1/k) y/(1-y)^2, y = (-q)^k.
  std::vector<RationalFunction> c(static_cast<std::size_t>(cutoff) + 1);
  for (int k = 1; k <= cutoff; ++k) {
    const LaurentPoly y = LaurentPoly::monomial(sign_power(k), k);
    const LaurentPoly one_minus_y = LaurentPoly(Rational(1)) - y;
    c[k] = RationalFunction(y * (Rational(-1) / Rational(k)), one_minus_y * one_minus_y);
  }
  std::vector<RationalFunction> e(c.size());
  e[0] = RationalFunction(Rational(1));
  for (int d = 1; d <= cutoff; ++d) {
    RationalFunction acc;
    for (int k = 1; k <= d; ++k) acc = acc + RationalFunction(Rational(k)) * c[k] * e[d - k];
    e[d] = acc * RationalFunction(Rational(1) / Rational(d));
  }
  std::map<CurveClass, RationalFunction> out;
  for (int d = 0; d <= cutoff; ++d) out.emplace(CurveClass{d}, e[d]);
  return out;
}

BigInt pt_coefficient_conifold(std::int64_t n) {
  if (n < 1) return 0;
  return (n % 2 == 1) ? BigInt(n) : BigInt(-n);
}

bool check_dtpt(const GradedSeries& dt, const GradedSeries& pt) {
  if (!(dt.grid() == pt.grid())) throw DomainError("check_dtpt: grids differ");
  const GradedSeries reduced = reduce_dt(dt);
  for (const CurveClass& beta : dt.grid().classes()) {
    if (is_zero_class(beta)) continue;
    if (!reduced.term(beta).agrees_with(pt.term(beta))) return false;
  }
  return true;
}

// ---- Gopakumar-Vafa form -------------------------------------------------

GradedSeries gv_expand(const GVTable& table, const ClassGrid& grid, std::int64_t lo,
                       std::int64_t hi) {
  GradedSeries genus_zero(grid);
  GradedSeries higher(grid);
  for (const auto& [key, n] : table.entries) {
    if (!grid.in_range(key.beta) || is_zero_class(key.beta)) {
      throw DomainError("GV table entry at class " + class_str(key.beta) +
                        " is not a nonzero class of the grid");
    }
    if (key.genus < 0) throw DomainError("GV table entry with negative genus");
    if (key.genus == 0) {
      for (std::int64_t j = 1; j <= std::max<std::int64_t>(hi, 1); ++j) {
        genus_zero = genus_zero +
                     log_factor(grid, {key.beta, j, Rational(j) * Rational(n), SignMode::kSigned});
      }
      continue;
    }
    const int g = key.genus;
    for (int k = 0; k <= 2 * g - 2; ++k) {
      const Rational e = sign_power(k + g) * Rational(n) * Rational(binomial(2 * g - 2, k));
      higher = higher + log_factor(grid, {key.beta, g - 1 - k, e, SignMode::kSigned});
    }
  }
  // Factors with j > hi only touch q-degrees above hi in the genus-zero log.
  return graded_exp(cap_layers(genus_zero, hi) + higher).restricted(lo, hi);
}

GvExtraction gv_extract(const GradedSeries& pt, int g_max) {
  if (g_max < 0) throw DomainError("gv_extract: g_max must be >= 0");
  const ClassGrid& grid = pt.grid();
  for (const auto& [beta, layer] : pt.terms()) {
    if (!layer.exact_below()) {
      throw WindowError("gv_extract: lower q-support of class " + class_str(beta) +
                        " is not known exactly");
    }
  }
  const GradedSeries ell = graded_log(pt);

  GvExtraction out;
  GradedSeries l_log(grid);
  for (const CurveClass& beta : grid.classes()) {
    if (is_zero_class(beta)) continue;
    auto [positive, symmetric] = split_symmetric(ell.term(beta));
    out.n.n_max[beta] = positive.hi();
    if (positive.bounded() && positive.hi() < 1) {
      throw WindowError("window underflow: requested [1,1], valid [" +
                        std::to_string(positive.lo()) + "," + std::to_string(positive.hi()) +
                        "] for class " + class_str(beta));
    }
    for (const auto& [n, c] : positive.coeffs().terms()) {
      out.n.values.emplace(std::pair{n, beta}, sign_power(n - 1) * c / Rational(n));
    }
    const Rational n1 = out.n.at(1, beta);
    if (!n1.is_integer()) {
      throw IntegralityError("GV integrality violation: n_0 at class " + class_str(beta) +
                             " is " + n1.str());
    }
    out.gv.set(0, beta, n1.to_integer());
    l_log.set(beta, WindowedLaurent::exact(symmetric.poly()));
    out.l.symmetric.emplace(beta, std::move(symmetric));
  }

  const GradedSeries l_raw = graded_exp(l_log);
  for (const CurveClass& beta : grid.classes()) {
    if (is_zero_class(beta)) continue;
    out.l.raw.emplace(beta, l_raw.term(beta).coeffs());
  }

  for (const CurveClass& beta : grid.classes()) {
    if (is_zero_class(beta)) continue;
    LaurentPoly rhs;
    for (std::int64_t a : class_divisors(beta)) {
      const int mu = mobius(a);
      if (mu == 0) continue;
      rhs += substitute_signed_power(out.l.symmetric.at(divide_class(beta, a)).poly(), a) *
             (Rational(mu) / Rational(a));
    }
    for (const auto& [g, value] : fg_decompose(SymmetricLaurentPoly(std::move(rhs)))) {
      if (!value.is_integer()) {
        throw IntegralityError("GV integrality violation: n_" + std::to_string(g) +
                               " at class " + class_str(beta) + " is " + value.str());
      }
      if (g > g_max) {
        throw IntegralityError("GV integrality violation: nonzero n_" + std::to_string(g) +
                               " at class " + class_str(beta) + " exceeds g_max = " +
                               std::to_string(g_max));
      }
      out.gv.set(g, beta, value.to_integer());
    }
  }
  return out;
}

namespace {

// Ordered decompositions of a class into nonzero parts, grouped by the
// number of parts, each mapped to the sum of products of raw L layers.
class CompositionSums {
 public:
  explicit CompositionSums(const LTable& table) : table_(table) {}

  const std::map<int, LaurentPoly>& of(const CurveClass& beta) {
    if (auto it = memo_.find(beta); it != memo_.end()) return it->second;
    std::map<int, LaurentPoly> sums;
    sums[1] = table_.raw_layer(beta);
    CurveClass first(beta.size(), 0);
    visit_parts(beta, 0, first, sums);
    std::erase_if(sums, [](const auto& kv) { return kv.second.is_zero(); });
    return memo_.emplace(beta, std::move(sums)).first->second;
  }

 private:
  // Enumerates proper nonzero parts `first` < beta and appends
  // L_first * (compositions of beta - first).
  void visit_parts(const CurveClass& beta, std::size_t index, CurveClass& first,
                   std::map<int, LaurentPoly>& sums) {
    if (index == beta.size()) {
      if (is_zero_class(first) || first == beta) return;
      CurveClass rest(beta.size());
      for (std::size_t i = 0; i < beta.size(); ++i) rest[i] = beta[i] - first[i];
      const LaurentPoly& head = table_.raw_layer(first);
      if (head.is_zero()) return;
      const std::map<int, LaurentPoly> tail = of(rest);
      for (const auto& [l, poly] : tail) sums[l + 1] += head * poly;
      return;
    }
    for (int d = 0; d <= beta[index]; ++d) {
      first[index] = d;
      visit_parts(beta, index + 1, first, sums);
    }
    first[index] = 0;
  }

  const LTable& table_;
  std::map<CurveClass, std::map<int, LaurentPoly>> memo_;
};

}  // namespace

Rational n_g_closed_form(const LTable& ltable, int g, const CurveClass& beta) {
  if (g < 1) throw DomainError("n_g_closed_form: genus must be >= 1");
  CompositionSums compositions(ltable);
  Rational total;
  for (std::int64_t a : class_divisors(beta)) {
    const int mu = mobius(a);
    if (mu == 0) continue;
    for (const auto& [l, poly] : compositions.of(divide_class(beta, a))) {
      for (const auto& [m, coeff] : poly.terms()) {
        const std::int64_t n = a * m;
        if (m < 0 || n < g - 1) continue;
        const BigInt bracket = binomial(n + g, 2 * g - 1) - binomial(n + g - 2, 2 * g - 1);
        if (bracket == 0) continue;
        total += Rational(mu) / Rational(a * l) * sign_power(l + g + m) * Rational(bracket) *
                 coeff;
      }
    }
  }
  return total;
}

Rational multicover_N(const std::map<CurveClass, Rational>& n1, std::int64_t n,
                      const CurveClass& beta) {
  if (is_zero_class(beta)) throw DomainError("multicover_N: beta must be nonzero");
  if (n < 1) throw DomainError("multicover_N: n must be >= 1");
  Rational total;
  for (std::int64_t k : class_divisors(beta)) {
    if (n % k != 0) continue;
    auto it = n1.find(divide_class(beta, k));
    if (it != n1.end()) total += it->second / Rational(k * k);
  }
  return total;
}

// ---- elliptic fibration --------------------------------------------------

GradedSeries weierstrass_pt(std::int64_t chi_x, std::int64_t chi_s, const ClassGrid& grid,
                            std::int64_t lo, std::int64_t hi) {
  require_line(grid, "weierstrass_pt");
  GradedSeries fiber_zero(grid);
  GradedSeries fiber_one(grid);
  for (int m = 1; m <= grid.cutoff(); ++m) {
    for (std::int64_t j = 1; j <= std::max<std::int64_t>(hi, 1); ++j) {
      fiber_zero = fiber_zero +
                   log_factor(grid, {{m}, j, Rational(-j) * Rational(chi_x), SignMode::kSigned});
    }
    fiber_one = fiber_one + log_factor(grid, {{m}, 0, Rational(-chi_s), SignMode::kSigned});
  }
  return graded_exp(cap_layers(fiber_zero, hi) + fiber_one).restricted(lo, hi);
}

GradedSeries goettsche(std::int64_t chi_s, int cutoff) {
  const ClassGrid grid = ClassGrid::line(cutoff);
  std::vector<ProductFactor> factors;
  for (int m = 1; m <= cutoff; ++m) factors.push_back({{m}, 0, Rational(-chi_s), SignMode::kPlain});
  return product_family(grid, factors);
}

}  // namespace curvecount
