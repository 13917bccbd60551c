#include "curvecount/exactnum.hpp"

#include <string>

#include "curvecount/errors.hpp"

namespace curvecount {

int mobius(std::int64_t n) {
  if (n < 1) {
    throw DomainError("mobius: argument must be >= 1, got " +
                      std::to_string(n));
  }
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Rational bernoulli(int m) {
  if (m < 0) throw DomainError("bernoulli: negative index");
  if (m > 1 && m % 2 == 1) {
    throw DomainError("bernoulli: odd index " + std::to_string(m) +
                      " is not supported");
  }
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
  std::vector<Rational> b(static_cast<std::size_t>(m) + 1);
  b[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational acc;
    for (int j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * b[j];
    b[n] = -acc / Rational(n + 1);
  }
  return b[m];
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt binomial_series(std::int64_t e, std::int64_t m) {
  if (m < 0) return 0;
  if (e >= 0) return binomial(e, m);
  // C(e, m) = (-1)^m C(m - e - 1, m) for e < 0.
  BigInt r = binomial(m - e - 1, m);
  return (m % 2 == 0) ? r : BigInt(-r);
}

BigInt c_coefficient(int g, int m) {
  if (g < 1 || m < 0 || g > m + 1) return 0;
  BigInt r = binomial(m + g, 2 * g - 1) - binomial(m + g - 2, 2 * g - 1);
  return ((m + g - 1) % 2 == 0) ? r : BigInt(-r);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw DomainError("divisors: argument must be >= 1");
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace curvecount
