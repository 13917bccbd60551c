#pragma once

#include <cstdint>
#include <limits>

#include "curvecount/laurent.hpp"

namespace curvecount {

/// Upper window bound of a series that is known exactly in every degree.
inline constexpr std::int64_t kUnbounded =
    std::numeric_limits<std::int64_t>::max() / 4;

/// Laurent series known exactly on the exponent window [lo, hi].
///
/// Coefficients above hi are unknown. Coefficients below lo are unknown
/// unless exact_below is set, in which case they are exactly zero. A series
/// with hi == kUnbounded is a finite Laurent polynomial known in full.
class WindowedLaurent {
 public:
  /// The exact zero series.
  WindowedLaurent() = default;
  /// Throws WindowError when hi < lo, DomainError when a stored exponent
  /// lies outside the window.
  WindowedLaurent(LaurentPoly coeffs, std::int64_t lo, std::int64_t hi,
                  bool exact_below);

  /// A finite Laurent polynomial, known in every degree.
  static WindowedLaurent exact(LaurentPoly poly);
  /// Keeps the coefficients of poly that fall in [lo, hi].
  static WindowedLaurent truncated(const LaurentPoly& poly, std::int64_t lo,
                                   std::int64_t hi, bool exact_below);

  const LaurentPoly& coeffs() const { return coeffs_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  bool exact_below() const { return exact_below_; }
  bool bounded() const { return hi_ < kUnbounded; }

  /// True when the coefficient of q^n is known exactly.
  bool known(std::int64_t n) const;
  /// Coefficient of q^n; throws WindowError unless known(n).
  Rational coeff(std::int64_t n) const;

  /// Lowest exponent that may carry a nonzero coefficient. For exact_below
  /// series this is the true lower support (hi + 1 when nothing is stored).
  std::int64_t effective_lo() const;

  /// Narrows the window to [lo, hi] (intersected with what is known).
  /// exact_below survives only if no nonzero coefficient is cut off below.
  WindowedLaurent restricted(std::int64_t lo, std::int64_t hi) const;

  /// Coefficient-wise agreement on the window both series know.
  bool agrees_with(const WindowedLaurent& other) const;

  WindowedLaurent operator-() const;
  WindowedLaurent& operator*=(const Rational& s);
  friend WindowedLaurent operator+(const WindowedLaurent& a,
                                   const WindowedLaurent& b);
  friend WindowedLaurent operator-(const WindowedLaurent& a,
                                   const WindowedLaurent& b);
  friend WindowedLaurent operator*(WindowedLaurent a, const Rational& s) {
    return a *= s;
  }
  friend bool operator==(const WindowedLaurent&,
                         const WindowedLaurent&) = default;

 private:
  LaurentPoly coeffs_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = kUnbounded;
  bool exact_below_ = true;
};

/// Sum of window bounds that saturates at kUnbounded.
std::int64_t window_add(std::int64_t a, std::int64_t b);

}  // namespace curvecount
