#pragma once

#include "curvecount/ratfun.hpp"
#include "curvecount/windowed.hpp"

namespace curvecount {

/// Exact Pade recognition. With v the lower support of the series, finds
/// q^v P(q) / Q(q) with deg P <= num_deg, deg Q <= den_deg, Q(0) = 1, whose
/// expansion reproduces every known coefficient. The window must supply at
/// least num_deg + den_deg + 2 coefficients from v upward so that one
/// equation is left over as a consistency check.
///
/// Throws DomainError("not recognized at given degrees") when no such
/// function exists, WindowError when the window is too short.
RationalFunction pade(const WindowedLaurent& series, int num_deg, int den_deg);

/// f(1/q) == f(q) as rational functions.
bool check_q_symmetry(const RationalFunction& f);

}  // namespace curvecount
