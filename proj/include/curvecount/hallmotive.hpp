#pragma once

#include <compare>
#include <map>
#include <vector>

#include "curvecount/laurent.hpp"
#include "curvecount/ratfun.hpp"

namespace curvecount {

/// Quotient stack [pt / (A^u x| prod_i GL_{k_i})].
struct StackSymbol {
  int unipotent_dim = 0;
  std::vector<int> gl_ranks;  // sorted ascending

  StackSymbol() = default;
  StackSymbol(int u, std::vector<int> ranks);

  int group_dimension() const;
  friend auto operator<=>(const StackSymbol&, const StackSymbol&) = default;
};

/// Finite Q-linear combination of stack symbols.
struct MotiveClass {
  std::map<StackSymbol, Rational> terms;

  void add(const StackSymbol& s, const Rational& c);
  friend bool operator==(const MotiveClass&, const MotiveClass&) = default;
};

/// P_t(GL_k) = t^{k(k-1)} prod_{i=1}^k (t^{2i} - 1); k = 0 gives 1.
LaurentPoly poincare_gl(int k);
/// 1 / (t^{2u} prod_i P_t(GL_{k_i})).
RationalFunction poincare_symbol(const StackSymbol& s);
RationalFunction poincare(const MotiveClass& m);

/// delta_{k_1} * ... * delta_{k_l} for a rigid simple object: all Ext^1
/// vanish, leaving Hom-unipotent part of dimension sum_{i<j} k_i k_j.
StackSymbol star_rigid(const std::vector<int>& composition);
/// Bilinear extension of the rigid * product to motive classes.
MotiveClass star(const MotiveClass& a, const MotiveClass& b);

/// sum over compositions (k_1..k_l) of k of ((-1)^{l-1}/l) star_rigid(...).
MotiveClass epsilon_rigid(int k);

struct SuperRigidCount {
  Rational n;                   // the t -> 1 limit
  RationalFunction t_function;  // (t^2 - 1) P_t(-nu * epsilon)
};

/// N_{0,k[C]} from the t -> 1 limit of (t^2-1) P_t(-nu epsilon_k) with
/// Behrend weight nu = (-1)^{k^2}.
SuperRigidCount n_superrigid_detail(int k);
Rational n_superrigid(int k);

/// Euler characteristic of the (1,1) moduli space of the A2 quiver with
/// central charge phases phi1, phi2 in (0, 1].
int a2_counting(const Rational& phi1, const Rational& phi2);

/// Ordered compositions of k into positive parts.
std::vector<std::vector<int>> compositions(int k);

}  // namespace curvecount
