#pragma once

#include <cstdint>
#include <vector>

#include "curvecount/rational.hpp"

namespace curvecount {

/// Moebius function; n must be >= 1.
int mobius(std::int64_t n);

/// Bernoulli number B_m with B_1 = -1/2, B_2 = 1/6, B_4 = -1/30.
/// Odd m > 1 is rejected.
Rational bernoulli(int m);

/// C(n, k), zero whenever k < 0, k > n or n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Coefficient of y^m in (1 + y)^e for an arbitrary integer e.
BigInt binomial_series(std::int64_t e, std::int64_t m);

/// Change-of-basis coefficient c_g^(m) with h_m = sum_g c_g^(m) f_g.
/// Zero outside 1 <= g <= m + 1.
BigInt c_coefficient(int g, int m);

/// Positive divisors of n >= 1 in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace curvecount
