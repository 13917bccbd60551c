#include "curvecount/hallmotive.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "curvecount/errors.hpp"

namespace curvecount {

StackSymbol::StackSymbol(int u, std::vector<int> ranks)
    : unipotent_dim(u), gl_ranks(std::move(ranks)) {
  if (unipotent_dim < 0) throw DomainError("stack symbol with negative unipotent dimension");
  for (int k : gl_ranks) {
    if (k < 1) throw DomainError("stack symbol with non-positive GL rank");
  }
  std::sort(gl_ranks.begin(), gl_ranks.end());
}

int StackSymbol::group_dimension() const {
  int d = unipotent_dim;
  for (int k : gl_ranks) d += k * k;
  return d;
}

void MotiveClass::add(const StackSymbol& s, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

LaurentPoly poincare_gl(int k) {
  if (k < 0) throw DomainError("poincare_gl: negative rank");
  LaurentPoly p = LaurentPoly::monomial(1, static_cast<std::int64_t>(k) * (k - 1));
  for (int i = 1; i <= k; ++i) {
    p = p * (LaurentPoly::monomial(1, 2 * i) - LaurentPoly(Rational(1)));
  }
  return p;
}

RationalFunction poincare_symbol(const StackSymbol& s) {
  LaurentPoly den = LaurentPoly::monomial(1, 2 * s.unipotent_dim);
  for (int k : s.gl_ranks) den = den * poincare_gl(k);
  return RationalFunction(LaurentPoly(Rational(1)), std::move(den));
}

RationalFunction poincare(const MotiveClass& m) {
  RationalFunction total;
  for (const auto& [s, c] : m.terms) total = total + RationalFunction(c) * poincare_symbol(s);
  return total;
}

StackSymbol star_rigid(const std::vector<int>& composition) {
  if (composition.empty()) throw DomainError("star_rigid: empty composition");
  int u = 0;
  int seen = 0;
  for (int k : composition) {
    u += seen * k;
    seen += k;
  }
  return StackSymbol(u, composition);
}

MotiveClass star(const MotiveClass& a, const MotiveClass& b) {
  MotiveClass out;
  for (const auto& [sa, ca] : a.terms) {
    const int ra = std::accumulate(sa.gl_ranks.begin(), sa.gl_ranks.end(), 0);
    for (const auto& [sb, cb] : b.terms) {
      const int rb = std::accumulate(sb.gl_ranks.begin(), sb.gl_ranks.end(), 0);
      std::vector<int> ranks = sa.gl_ranks;
      ranks.insert(ranks.end(), sb.gl_ranks.begin(), sb.gl_ranks.end());
      out.add(StackSymbol(sa.unipotent_dim + sb.unipotent_dim + ra * rb, std::move(ranks)),
              ca * cb);
    }
  }
  return out;
}

std::vector<std::vector<int>> compositions(int k) {
  if (k < 1) throw DomainError("compositions: k must be positive");
  std::vector<std::vector<int>> out;
  // Bit i of mask set means a cut after position i + 1.
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < k - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  return out;
}

MotiveClass epsilon_rigid(int k) {
  MotiveClass eps;
  for (const auto& comp : compositions(k)) {
    const long l = static_cast<long>(comp.size());
    eps.add(star_rigid(comp), sign_power(l - 1) / Rational(l));
  }
  return eps;
}

SuperRigidCount n_superrigid_detail(int k) {
  if (k < 1) throw DomainError("n_superrigid: k must be positive");
  const long k2 = static_cast<long>(k) * k;
  const RationalFunction t2_minus_1(LaurentPoly::monomial(1, 2) - LaurentPoly(Rational(1)));
  const RationalFunction f =
      t2_minus_1 * RationalFunction(sign_power(k2 + 1)) * poincare(epsilon_rigid(k));
  if (f.den().evaluate(Rational(1)).is_zero()) {
    throw DomainError("expected cancellation failed: (t^2-1) P_t(epsilon) has a pole at t = 1");
  }
  return {f.evaluate(Rational(1)), f};
}

Rational n_superrigid(int k) { return n_superrigid_detail(k).n; }

int a2_counting(const Rational& phi1, const Rational& phi2) {
  for (const Rational* phi : {&phi1, &phi2}) {
    if (phi->sign() <= 0 || *phi > Rational(1)) {
      throw DomainError("a2_counting: phase " + phi->str() + " outside (0,1]");
    }
  }
  if (phi2 < phi1) return 1;
  if (phi2 == phi1) return 2;
  return 0;
}

}  // namespace curvecount
