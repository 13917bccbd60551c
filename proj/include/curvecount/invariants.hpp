#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "curvecount/gseries.hpp"
#include "curvecount/laurent.hpp"
#include "curvecount/ratfun.hpp"
#include "curvecount/windowed.hpp"

namespace curvecount {

struct GvKey {
  int genus = 0;
  CurveClass beta;
  friend auto operator<=>(const GvKey&, const GvKey&) = default;
};

/// Gopakumar-Vafa invariants n_g^beta; only nonzero entries are stored.
struct GVTable {
  std::map<GvKey, BigInt> entries;

  BigInt at(int genus, const CurveClass& beta) const;
  void set(int genus, const CurveClass& beta, const BigInt& n);
  friend bool operator==(const GVTable&, const GVTable&) = default;
};

/// Generalized DT invariants N_{n,beta} for 1 <= n <= n_max[beta].
struct NTable {
  std::map<std::pair<std::int64_t, CurveClass>, Rational> values;  // nonzero only
  std::map<CurveClass, std::int64_t> n_max;  // kUnbounded when every n is known

  /// Throws WindowError outside the known range.
  Rational at(std::int64_t n, const CurveClass& beta) const;
  /// N_{1,beta} for every class with a known value.
  std::map<CurveClass, Rational> genus_zero_layer() const;
};

/// Rank-one invariants: the symmetric layers L_beta(q) of log(sum L t^beta)
/// and the raw coefficients L_{n,beta} of the series itself.
struct LTable {
  std::map<CurveClass, SymmetricLaurentPoly> symmetric;
  std::map<CurveClass, LaurentPoly> raw;

  /// Throws DomainError when beta was never filled in.
  const LaurentPoly& raw_layer(const CurveClass& beta) const;
};

struct GvExtraction {
  GVTable gv;
  NTable n;
  LTable l;
};

// ---- degree zero ---------------------------------------------------------

/// prod_{k>=1} (1 - q^k)^{-k} on [0, order].
WindowedLaurent macmahon(int order);
/// M(-q)^chi on [0, order].
WindowedLaurent dt_zero(std::int64_t chi, int order);
/// -chi * sum_{k | n} 1/k^2.
Rational n_degree_zero(std::int64_t chi, std::int64_t n);
/// prod_{n>0} exp((-1)^{n-1} n N_{n,0} q^n) == M(-q)^chi through q^order.
bool check_dt0_identity(std::int64_t chi, int order);

// ---- DT / PT series ------------------------------------------------------

/// DT(X) / DT_0(X); the beta = 0 layer of the result is exactly 1.
GradedSeries reduce_dt(const GradedSeries& dt);
/// M(-q)^chi prod_{k>=1} (1 - (-q)^k t)^k on a rank-one grid.
GradedSeries conifold_dt(std::int64_t chi, const ClassGrid& grid, std::int64_t lo,
                         std::int64_t hi);
/// Reduced conifold DT series t^d -> rational function in q, d <= cutoff.
std::map<CurveClass, RationalFunction> conifold_reduced_ratfuns(int cutoff);
/// (-1)^{n-1} n for n >= 1, zero otherwise.
BigInt pt_coefficient_conifold(std::int64_t n);
/// reduce_dt(dt) agrees with pt on every shared window, beta > 0.
bool check_dtpt(const GradedSeries& dt, const GradedSeries& pt);

// ---- Gopakumar-Vafa form -------------------------------------------------

/// PT series in Gopakumar-Vafa product form, truncated to the grid and to
/// the q-window [lo, hi]. Genus-zero factors run over j <= hi.
GradedSeries gv_expand(const GVTable& table, const ClassGrid& grid, std::int64_t lo,
                       std::int64_t hi);

/// Recovers GV invariants, N_{n,beta} and L_beta from a PT series.
/// Throws WindowError when the windows are too short to mirror negative
/// support, IntegralityError on non-integral output or on nonzero genus
/// above g_max.
GvExtraction gv_extract(const GradedSeries& pt, int g_max);

/// n_g^beta (g >= 1) from the raw L_{n,beta} via the explicit
/// composition-sum formula.
Rational n_g_closed_form(const LTable& ltable, int g, const CurveClass& beta);

/// sum_{k | (n, beta)} N_{1, beta/k} / k^2; missing N_1 entries count as 0.
Rational multicover_N(const std::map<CurveClass, Rational>& n1, std::int64_t n,
                      const CurveClass& beta);

// ---- elliptic fibration --------------------------------------------------

/// prod_{m,j} (1 - (-q)^j t^m)^{-j chiX} prod_m (1 - t^m)^{-chiS}.
GradedSeries weierstrass_pt(std::int64_t chi_x, std::int64_t chi_s, const ClassGrid& grid,
                            std::int64_t lo, std::int64_t hi);
/// prod_m (1 - t^m)^{-chiS} through t^cutoff.
GradedSeries goettsche(std::int64_t chi_s, int cutoff);

// ---- Gromov-Witten -------------------------------------------------------

/// Layers of GW(X) in lambda, known on [-2, lambda_order].
std::map<CurveClass, WindowedLaurent> gv_to_gw(const GVTable& table, int lambda_order,
                                               const ClassGrid& grid);
/// Multiple-cover contribution of a rigid (-1,-1) curve in genus g, degree d.
Rational gw_local_curve(int g, std::int64_t d);

struct GwDtReport {
  bool ok = false;
  std::string reason;
};

/// Substitutes q = -e^{i lambda} into each reduced DT rational function and
/// compares with exp(GW) through lambda^lambda_order.
GwDtReport diagnose_gw_dt(const std::map<CurveClass, RationalFunction>& dt_prime,
                          const std::map<CurveClass, WindowedLaurent>& gw,
                          const ClassGrid& grid, int lambda_order);
bool check_gw_dt(const std::map<CurveClass, RationalFunction>& dt_prime,
                 const std::map<CurveClass, WindowedLaurent>& gw, const ClassGrid& grid,
                 int lambda_order);

/// Coefficients of f(-e^{i lambda}) from its lowest order through
/// lambda^order.
std::map<std::int64_t, GaussianRational> expand_at_minus_exp(const RationalFunction& f,
                                                             int order);

}  // namespace curvecount
