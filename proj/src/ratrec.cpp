#include "curvecount/ratrec.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

// Solves M x = rhs exactly; free variables are set to zero. Returns false when
// the system is inconsistent.
bool solve_exact(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                 std::vector<Rational>& x) {
  const std::size_t rows = m.size();
  const std::size_t cols = x.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return false;
  }
  std::fill(x.begin(), x.end(), Rational());
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return true;
}

}  // namespace

RationalFunction pade(const WindowedLaurent& series, int num_deg, int den_deg) {
  if (num_deg < 0 || den_deg < 0) throw DomainError("pade: degrees must be non-negative");
  if (!series.exact_below()) {
    throw WindowError("pade: lower support of the series is not known exactly");
  }
  if (series.coeffs().is_zero()) return RationalFunction();
  const std::int64_t v = *series.coeffs().min_exponent();
  const std::int64_t needed = num_deg + den_deg + 2;
  const std::int64_t available =
      series.bounded() ? series.hi() - v + 1
                       : std::max<std::int64_t>(*series.coeffs().max_exponent() - v + 1, needed);
  if (available < needed) {
    throw WindowError("window underflow: requested [" + std::to_string(v) + "," +
                      std::to_string(v + needed - 1) + "], valid [" +
                      std::to_string(series.lo()) + "," + std::to_string(series.hi()) + "]");
  }
  std::vector<Rational> s(static_cast<std::size_t>(available));
  for (const auto& [e, c] : series.coeffs().terms()) {
    if (e - v < available) s[static_cast<std::size_t>(e - v)] = c;
  }
  // Unknowns: Q_1..Q_den (Q_0 = 1), then P_0..P_num.
  // (Q S)_k - P_k = 0 for k < available.
  const std::size_t unknowns = static_cast<std::size_t>(den_deg + num_deg + 1);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(available),
                                       std::vector<Rational>(unknowns));
  std::vector<Rational> rhs(static_cast<std::size_t>(available));
  for (std::int64_t k = 0; k < available; ++k) {
    for (std::int64_t j = 1; j <= std::min<std::int64_t>(k, den_deg); ++j) {
      m[k][j - 1] = s[k - j];
    }
    if (k <= num_deg) m[k][den_deg + k] = -1;
    rhs[k] = -s[k];
  }
  std::vector<Rational> x(unknowns);
  if (!solve_exact(std::move(m), std::move(rhs), x)) {
    throw DomainError("not recognized at given degrees (" + std::to_string(num_deg) + "," +
                      std::to_string(den_deg) + ")");
  }
  LaurentPoly num;
  LaurentPoly den(Rational(1));
  for (int j = 1; j <= den_deg; ++j) den.add_term(j, x[j - 1]);
  for (int k = 0; k <= num_deg; ++k) num.add_term(v + k, x[den_deg + k]);
  return RationalFunction(std::move(num), std::move(den));
}

bool check_q_symmetry(const RationalFunction& f) { return f.reflected() == f; }

}  // namespace curvecount
