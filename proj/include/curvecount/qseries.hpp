#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "curvecount/laurent.hpp"
#include "curvecount/ratfun.hpp"
#include "curvecount/windowed.hpp"

namespace curvecount {

/// Product of two windowed series on the window where it is guaranteed:
///   lo = a.lo + b.lo,
///   hi = min(a.hi + b.effective_lo, b.hi + a.effective_lo).
/// exact_below is the AND of the inputs.
WindowedLaurent mul_windowed(const WindowedLaurent& a, const WindowedLaurent& b);

/// Multiplicative inverse of a series whose lowest coefficient is known and
/// nonzero (requires exact_below).
WindowedLaurent invert_windowed(const WindowedLaurent& a);

/// Laurent expansion of f around q = 0 through q^hi. The window starts at
/// min(lo, lower support of f) so that exact_below always holds.
WindowedLaurent expand_ratfun(const RationalFunction& f, std::int64_t lo,
                              std::int64_t hi);

/// q -> -(-q)^a, i.e. c q^m -> (-1)^{m(a+1)} c q^{am}.
LaurentPoly substitute_signed_power(const LaurentPoly& f, std::int64_t a);

/// Splits l = positive + symmetric with positive in q Q[[q]] and symmetric a
/// q <-> 1/q invariant Laurent polynomial. The negative support of l must be
/// known exactly and mirrored inside the window; otherwise throws WindowError.
std::pair<WindowedLaurent, SymmetricLaurentPoly> split_symmetric(
    const WindowedLaurent& l);

/// q^{1-g} (1+q)^{2g-2}, g >= 1.
SymmetricLaurentPoly f_g(int g);
/// 1 for m = 0, q^m + q^{-m} otherwise.
SymmetricLaurentPoly h_m(int m);

/// Coordinates in the h_m basis.
std::map<int, Rational> h_decompose(const SymmetricLaurentPoly& s);
/// Coordinates in the f_g basis, via the c_g^(m) change of basis.
std::map<int, Rational> fg_decompose(const SymmetricLaurentPoly& s);

}  // namespace curvecount
