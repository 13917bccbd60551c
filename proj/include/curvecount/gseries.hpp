#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "curvecount/windowed.hpp"

namespace curvecount {

/// Effective curve class: non-negative coordinates in N^r.
using CurveClass = std::vector<int>;

bool is_zero_class(const CurveClass& beta);

/// Range of curve classes tracked by a truncated series: beta is in range iff
/// sum_i weights[i] * beta[i] <= cutoff.
class ClassGrid {
 public:
  ClassGrid(int rank, std::vector<int> weights, int cutoff);
  /// Rank-one grid with unit weight.
  static ClassGrid line(int cutoff) { return ClassGrid(1, {1}, cutoff); }

  int rank() const { return rank_; }
  const std::vector<int>& weights() const { return weights_; }
  int cutoff() const { return cutoff_; }

  int degree(const CurveClass& beta) const;
  bool in_range(const CurveClass& beta) const;
  CurveClass zero() const { return CurveClass(static_cast<std::size_t>(rank_), 0); }

  /// Every in-range class ordered by degree, then lexicographically; the zero
  /// class comes first.
  const std::vector<CurveClass>& classes() const { return classes_; }

  friend bool operator==(const ClassGrid& a, const ClassGrid& b) {
    return a.rank_ == b.rank_ && a.weights_ == b.weights_ && a.cutoff_ == b.cutoff_;
  }

 private:
  int rank_;
  std::vector<int> weights_;
  int cutoff_;
  std::vector<CurveClass> classes_;
};

/// Element of Q((q))[[t^beta]] truncated to a ClassGrid. Absent layers are
/// exactly zero.
class GradedSeries {
 public:
  explicit GradedSeries(ClassGrid grid) : grid_(std::move(grid)) {}
  /// The constant series 1.
  static GradedSeries one(const ClassGrid& grid);

  const ClassGrid& grid() const { return grid_; }
  const std::map<CurveClass, WindowedLaurent>& terms() const { return terms_; }

  /// Layer at beta (exact zero if absent). beta must be in range.
  WindowedLaurent term(const CurveClass& beta) const;
  bool has_term(const CurveClass& beta) const { return terms_.contains(beta); }
  /// Stores a layer; exact zero layers are dropped.
  void set(const CurveClass& beta, WindowedLaurent layer);

  /// Applies restricted(lo, hi) to every layer.
  GradedSeries restricted(std::int64_t lo, std::int64_t hi) const;

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const Rational& s);
  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  ClassGrid grid_;
  std::map<CurveClass, WindowedLaurent> terms_;
};

/// (ab)_beta = sum over beta1 + beta2 = beta of a_beta1 * b_beta2.
GradedSeries graded_mul(const GradedSeries& a, const GradedSeries& b);

/// exp of a series with no beta = 0 layer.
GradedSeries graded_exp(const GradedSeries& a);
/// log of a series whose beta = 0 layer is exactly 1.
GradedSeries graded_log(const GradedSeries& a);

enum class SignMode {
  kSigned,  // base monomial (-q)^j t^beta
  kPlain,   // base monomial q^j t^beta
};

/// One factor (1 - x)^exponent with x = (+-q)^j t^beta.
struct ProductFactor {
  CurveClass beta;
  std::int64_t j = 0;
  Rational exponent;
  SignMode sign = SignMode::kSigned;
};

/// exponent * log(1 - x) = -exponent * sum_m x^m / m, truncated to the grid.
GradedSeries log_factor(const ClassGrid& grid, const ProductFactor& factor);

/// prod (1 - x)^exponent, computed as exp of the summed logarithms.
GradedSeries product_family(const ClassGrid& grid,
                            const std::vector<ProductFactor>& factors);

/// All a >= 1 dividing every coordinate of beta != 0.
std::vector<std::int64_t> class_divisors(const CurveClass& beta);
/// Componentwise beta / a (a must divide beta).
CurveClass divide_class(const CurveClass& beta, std::int64_t a);
/// Componentwise a * beta.
CurveClass scale_class(const CurveClass& beta, std::int64_t a);

}  // namespace curvecount
