#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "curvecount/errors.hpp"
#include "curvecount/exactnum.hpp"
#include "curvecount/invariants.hpp"
#include "curvecount/qseries.hpp"
#include "oracles.hpp"

using namespace curvecount;

namespace {

LaurentPoly q(std::int64_t e, long c = 1) { return LaurentPoly::monomial(Rational(c), e); }
const LaurentPoly kOne = q(0);

GVTable single(int g, const CurveClass& beta, long n) {
  GVTable t;
  t.set(g, beta, BigInt(n));
  return t;
}

WindowedLaurent conifold_layer(std::int64_t lo, std::int64_t hi) {
  return expand_ratfun(RationalFunction(q(1), pow(kOne + q(1), 2)), lo, hi);
}

// Direct product of the Gopakumar-Vafa factors for a rank-one table with the
// genus-zero j-product cut at j_max.
oracle::Bivariate gv_product_oracle(const GVTable& t, int max_t, int j_max) {
  oracle::Bivariate r = oracle::Bivariate::one(max_t);
  for (const auto& [key, n] : t.entries) {
    const int d = key.beta[0];
    const long nn = n.get_si();
    if (key.genus == 0) {
      for (int j = 1; j <= j_max; ++j) r = r * oracle::binomial_factor(max_t, d, j, j * nn, -1);
      continue;
    }
    const int g = key.genus;
    for (int k = 0; k <= 2 * g - 2; ++k) {
      const long e = ((k + g) % 2 == 0 ? 1 : -1) * nn * binomial(2 * g - 2, k).get_si();
      r = r * oracle::binomial_factor(max_t, d, g - 1 - k, e, -1);
    }
  }
  return r;
}

GVTable random_table(std::mt19937& rng, const ClassGrid& grid, int g_max) {
  std::uniform_int_distribution<int> value(-5, 5);
  std::uniform_int_distribution<int> genus(0, g_max);
  std::uniform_int_distribution<int> count(0, 4);
  std::vector<CurveClass> nonzero;
  for (const CurveClass& beta : grid.classes()) {
    if (!is_zero_class(beta)) nonzero.push_back(beta);
  }
  std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1);
  GVTable t;
  const int entries = count(rng);
  for (int i = 0; i < entries; ++i) {
    const int v = value(rng);
    if (v != 0) t.set(genus(rng), nonzero[pick(rng)], BigInt(v));
  }
  return t;
}

}  // namespace

// ---- degree zero ---------------------------------------------------------

TEST(MacMahon, LowOrders) {
  EXPECT_EQ(macmahon(3).coeffs(), kOne + q(1) + q(2, 3) + q(3, 6));
  EXPECT_EQ(macmahon(0).coeffs(), kOne);
  EXPECT_EQ(macmahon(4).coeff(4), Rational(13));
  EXPECT_TRUE(macmahon(3).exact_below());
  EXPECT_EQ(macmahon(3).hi(), 3);
}

TEST(MacMahon, CountsPlanePartitions) {
  const WindowedLaurent m = macmahon(10);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(m.coeff(n), Rational(oracle::plane_partitions(n))) << n;
}

TEST(DtZero, Examples) {
  EXPECT_EQ(dt_zero(0, 5).coeffs(), kOne);
  EXPECT_EQ(dt_zero(1, 3).coeffs(), kOne - q(1) + q(2, 3) - q(3, 6));
  EXPECT_EQ(dt_zero(2, 4).coeff(2), Rational(7));
}

TEST(DtZero, NegativeChiInverts) {
  for (int chi : {1, 3, 540}) {
    const WindowedLaurent p = mul_windowed(dt_zero(chi, 8), dt_zero(-chi, 8));
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(p.coeff(n), Rational(n == 0 ? 1 : 0));
  }
}

TEST(DtZero, PowerMatchesRepeatedProduct) {
  WindowedLaurent acc = WindowedLaurent::exact(kOne);
  for (int chi = 1; chi <= 4; ++chi) {
    acc = mul_windowed(acc, dt_zero(1, 9));
    const WindowedLaurent direct = dt_zero(chi, 9);
    for (int n = 0; n <= 9; ++n) EXPECT_EQ(acc.coeff(n), direct.coeff(n));
  }
}

TEST(NDegreeZero, Examples) {
  EXPECT_EQ(n_degree_zero(7, 1), Rational(-7));
  EXPECT_EQ(n_degree_zero(2, 2), Rational(-5, 2));
  EXPECT_EQ(n_degree_zero(1, 6), Rational(-25, 18));
  EXPECT_THROW(n_degree_zero(1, 0), DomainError);
}

TEST(CheckDt0Identity, HoldsForSeveralChi) {
  for (int chi : {-6, -4, 0, 1, 2, 10}) EXPECT_TRUE(check_dt0_identity(chi, 10)) << chi;
  EXPECT_TRUE(check_dt0_identity(1, 6));
}

// ---- DT / PT -------------------------------------------------------------

TEST(ConifoldDt, DegreeZeroLayer) {
  const GradedSeries dt = conifold_dt(3, ClassGrid::line(2), 0, 6);
  const WindowedLaurent d0 = dt_zero(3, 6);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(dt.term({0}).coeff(n), d0.coeff(n));
}

TEST(ConifoldDt, MatchesDirectProduct) {
  const GradedSeries dt = conifold_dt(0, ClassGrid::line(2), 0, 3);
  oracle::Bivariate ref = oracle::Bivariate::one(2);
  for (int k = 1; k <= 3; ++k) ref = ref * oracle::binomial_factor(2, 1, k, k, -1);
  for (int n = 2; n <= 3; ++n) EXPECT_EQ(dt.term({2}).coeff(n), ref.at(2, n)) << n;
  EXPECT_THROW(conifold_dt(1, ClassGrid(2, {1, 1}, 2), 0, 3), DomainError);
}

TEST(ReduceDt, ConifoldIndependentOfChi) {
  for (int chi : {10, -2, 0}) {
    const GradedSeries r = reduce_dt(conifold_dt(chi, ClassGrid::line(1), 0, 10));
    EXPECT_EQ(r.term({0}).coeffs(), kOne);
    const WindowedLaurent ref = conifold_layer(1, 10);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(r.term({1}).coeff(n), ref.coeff(n)) << n;
  }
}

TEST(ReduceDt, TrivialAndRoundTrip) {
  const ClassGrid g = ClassGrid::line(2);
  GradedSeries only0(g);
  only0.set({0}, dt_zero(4, 6));
  const GradedSeries r = reduce_dt(only0);
  EXPECT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.term({0}).coeffs(), kOne);

  GradedSeries cof = GradedSeries::one(g);
  cof.set({1}, WindowedLaurent(q(-1) + q(2, 3), -1, 6, true));
  cof.set({2}, WindowedLaurent(q(0, -2), -2, 6, true));
  GradedSeries d0(g);
  d0.set({0}, dt_zero(5, 8));
  const GradedSeries back = reduce_dt(graded_mul(d0, cof));
  for (const CurveClass& beta : g.classes()) EXPECT_TRUE(back.term(beta).agrees_with(cof.term(beta)));
  EXPECT_EQ(back.term({1}).coeff(2), Rational(3));
}

TEST(ConifoldRatfuns, ExpandToReducedSeries) {
  const auto f = conifold_reduced_ratfuns(3);
  const GradedSeries r = reduce_dt(conifold_dt(1, ClassGrid::line(3), 0, 12));
  EXPECT_EQ(f.at({1}), RationalFunction(q(1), pow(kOne + q(1), 2)));
  for (int d = 1; d <= 3; ++d) {
    const WindowedLaurent e = expand_ratfun(f.at({d}), 0, 12);
    EXPECT_TRUE(e.agrees_with(r.term({d}))) << d;
    EXPECT_GE(r.term({d}).hi(), 10);
    EXPECT_EQ(f.at({d}).reflected(), f.at({d}));
  }
}

TEST(PtCoefficient, Conifold) {
  EXPECT_EQ(pt_coefficient_conifold(3), BigInt(3));
  EXPECT_EQ(pt_coefficient_conifold(2), BigInt(-2));
  EXPECT_EQ(pt_coefficient_conifold(0), BigInt(0));
  EXPECT_EQ(pt_coefficient_conifold(-4), BigInt(0));
  const GradedSeries pt = gv_expand(single(0, {1}, 1), ClassGrid::line(1), -3, 9);
  for (int n = -3; n <= 9; ++n) EXPECT_EQ(pt.term({1}).coeff(n), Rational(pt_coefficient_conifold(n)));
}

TEST(CheckDtpt, Examples) {
  const ClassGrid g = ClassGrid::line(1);
  const GradedSeries dt = conifold_dt(2, g, 0, 6);
  const GradedSeries pt = gv_expand(single(0, {1}, 1), g, 1, 6);
  EXPECT_TRUE(check_dtpt(dt, pt));

  GradedSeries only0(g);
  only0.set({0}, dt_zero(2, 6));
  EXPECT_TRUE(check_dtpt(only0, GradedSeries::one(g)));

  GradedSeries bad = pt;
  bad.set({1}, pt.term({1}) + WindowedLaurent::exact(q(3)));
  EXPECT_FALSE(check_dtpt(dt, bad));
  EXPECT_THROW(check_dtpt(dt, GradedSeries::one(ClassGrid::line(2))), DomainError);
}

TEST(CheckDtpt, HigherDegreeConifold) {
  const ClassGrid g = ClassGrid::line(4);
  EXPECT_TRUE(check_dtpt(conifold_dt(-3, g, 0, 10), gv_expand(single(0, {1}, 1), g, -8, 10)));
}

// ---- GV expansion --------------------------------------------------------

TEST(GvExpand, Examples) {
  const GradedSeries c = gv_expand(single(0, {1}, 1), ClassGrid::line(1), 1, 10);
  const WindowedLaurent ref = conifold_layer(1, 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(c.term({1}).coeff(n), ref.coeff(n));

  const GradedSeries e = gv_expand(GVTable{}, ClassGrid::line(3), -2, 5);
  EXPECT_EQ(e.terms().size(), 1u);
  EXPECT_EQ(e.term({0}).coeffs(), kOne);

  const GradedSeries g1 = gv_expand(single(1, {1}, 1), ClassGrid::line(2), -2, 5);
  for (int d = 0; d <= 2; ++d) EXPECT_EQ(g1.term({d}).coeffs(), kOne) << d;

  EXPECT_THROW(gv_expand(single(0, {3}, 1), ClassGrid::line(2), 0, 3), DomainError);
}

TEST(GvExpand, MatchesDirectProduct) {
  std::mt19937 rng(404);
  const int max_t = 3;
  const int hi = 10;
  const ClassGrid grid = ClassGrid::line(max_t);
  for (int trial = 0; trial < 25; ++trial) {
    const GVTable t = random_table(rng, grid, 2);
    const GradedSeries s = gv_expand(t, grid, -6, hi);
    // Genus-two factors reach q^-1 per unit of t-degree, so j <= hi + max_t
    // covers every coefficient through q^hi.
    const oracle::Bivariate ref = gv_product_oracle(t, max_t, hi + max_t);
    for (int d = 0; d <= max_t; ++d) {
      const WindowedLaurent layer = s.term({d});
      ASSERT_GE(layer.hi(), hi - max_t);
      for (std::int64_t n = -6; n <= std::min<std::int64_t>(layer.hi(), hi); ++n) {
        ASSERT_EQ(layer.coeff(n), ref.at(d, static_cast<long>(n))) << "trial " << trial;
      }
    }
  }
}

// ---- GV extraction -------------------------------------------------------

TEST(GvExtract, Conifold) {
  const GvExtraction x = gv_extract(gv_expand(single(0, {1}, 1), ClassGrid::line(1), -3, 8), 3);
  EXPECT_EQ(x.gv, single(0, {1}, 1));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(x.n.at(n, {1}), Rational(1)) << n;
  EXPECT_TRUE(x.l.symmetric.at({1}).is_zero());
  EXPECT_THROW(x.n.at(9, {1}), WindowError);
  EXPECT_TRUE(x.l.raw_layer({1}).is_zero());
}

TEST(GvExtract, GenusOneCurve) {
  const GvExtraction x = gv_extract(gv_expand(single(1, {1}, 1), ClassGrid::line(1), -3, 6), 3);
  EXPECT_EQ(x.gv, single(1, {1}, 1));
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(x.n.at(n, {1}).is_zero());
  EXPECT_EQ(x.l.symmetric.at({1}).poly(), kOne);
}

TEST(GvExtract, Errors) {
  const ClassGrid g = ClassGrid::line(1);
  // Genus three needs g_max >= 3.
  EXPECT_THROW(gv_extract(gv_expand(single(3, {1}, 2), g, -4, 8), 2), IntegralityError);
  EXPECT_NO_THROW(gv_extract(gv_expand(single(3, {1}, 2), g, -4, 8), 3));
  // q^-2 cannot be mirrored from a window stopping at q^1.
  EXPECT_THROW(gv_extract(gv_expand(single(3, {1}, 2), g, -4, 1), 3), WindowError);
  // Halving a GV series breaks integrality.
  GradedSeries half = gv_expand(single(0, {1}, 1), g, 0, 6);
  half.set({1}, half.term({1}) * Rational(1, 2));
  try {
    gv_extract(half, 2);
    FAIL() << "expected an integrality error";
  } catch (const IntegralityError& e) {
    EXPECT_NE(std::string(e.what()).find("GV integrality violation"), std::string::npos);
  }
  GradedSeries open = gv_expand(single(0, {1}, 1), g, 0, 6);
  open.set({1}, open.term({1}).restricted(2, 6));
  EXPECT_THROW(gv_extract(open, 2), WindowError);
}

TEST(GvExtract, RoundTripOnRandomTables) {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> rank_dist(1, 2);
  std::uniform_int_distribution<int> cutoff_dist(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = rank_dist(rng);
    const ClassGrid grid(rank, std::vector<int>(static_cast<std::size_t>(rank), 1), cutoff_dist(rng));
    const GVTable t = random_table(rng, grid, 3);
    const GradedSeries pt = gv_expand(t, grid, -8, 24);
    const GvExtraction x = gv_extract(pt, 3);
    ASSERT_EQ(x.gv, t) << "trial " << trial;

    const auto n1 = x.n.genus_zero_layer();
    for (const auto& [key, value] : x.n.values) {
      ASSERT_EQ(value, multicover_N(n1, key.first, key.second)) << "trial " << trial;
    }
    for (const CurveClass& beta : grid.classes()) {
      if (is_zero_class(beta)) continue;
      const LaurentPoly& l = x.l.symmetric.at(beta).poly();
      ASSERT_EQ(l.reflected(), l);
      for (std::int64_t n = 1; n <= std::min<std::int64_t>(x.n.n_max.at(beta), 12); ++n) {
        ASSERT_EQ(x.n.at(n, beta), multicover_N(n1, n, beta));
      }
      for (int g = 1; g <= 3; ++g) {
        ASSERT_EQ(n_g_closed_form(x.l, g, beta), Rational(x.gv.at(g, beta)))
            << "trial " << trial << " g=" << g;
      }
    }
    // Rebuilding from the extracted table reproduces the input series.
    const GradedSeries again = gv_expand(x.gv, grid, -8, 24);
    for (const CurveClass& beta : grid.classes()) {
      ASSERT_TRUE(again.term(beta).agrees_with(pt.term(beta)));
    }
  }
}

TEST(NgClosedForm, Examples) {
  const ClassGrid g = ClassGrid::line(2);
  const GvExtraction zero = gv_extract(gv_expand(single(0, {1}, 1), g, -4, 10), 3);
  for (int genus = 1; genus <= 3; ++genus) {
    EXPECT_TRUE(n_g_closed_form(zero.l, genus, {1}).is_zero());
    EXPECT_TRUE(n_g_closed_form(zero.l, genus, {2}).is_zero());
  }
  const GvExtraction one = gv_extract(gv_expand(single(1, {1}, 1), g, -4, 10), 3);
  EXPECT_EQ(n_g_closed_form(one.l, 1, {1}), Rational(1));
  EXPECT_THROW(n_g_closed_form(one.l, 0, {1}), DomainError);
  EXPECT_THROW(n_g_closed_form(LTable{}, 1, {1}), DomainError);
}

TEST(MulticoverN, Examples) {
  const std::map<CurveClass, Rational> n1 = {{{1}, Rational(1)}};
  EXPECT_EQ(multicover_N(n1, 2, {2}), Rational(1, 4));
  EXPECT_EQ(multicover_N(n1, 3, {2}), Rational(0));
  EXPECT_EQ(multicover_N({{{2}, Rational(5)}}, 1, {2}), Rational(5));
  EXPECT_EQ(multicover_N({{{1, 1}, Rational(2)}}, 4, {2, 2}), Rational(1, 2));
  EXPECT_THROW(multicover_N(n1, 1, {0}), DomainError);
}

// ---- elliptic fibration --------------------------------------------------

TEST(Goettsche, Coefficients) {
  const GradedSeries g = goettsche(3, 4);
  oracle::Bivariate ref = oracle::Bivariate::one(4);
  for (int m = 1; m <= 4; ++m) ref = ref * oracle::binomial_factor(4, m, 0, -3, 1);
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(g.term({m}).coeff(0), ref.at(m, 0)) << m;
  EXPECT_EQ(g.term({1}).coeff(0), Rational(3));
  EXPECT_EQ(g.term({2}).coeff(0), Rational(9));
  EXPECT_EQ(g.term({3}).coeff(0), Rational(22));
  const GradedSeries trivial = goettsche(0, 3);
  EXPECT_EQ(trivial.terms().size(), 1u);
}

TEST(Weierstrass, QZeroLayerIsGoettsche) {
  const GradedSeries w = weierstrass_pt(-540, 3, ClassGrid::line(3), -1, 6);
  const GradedSeries g = goettsche(3, 3);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(w.term({m}).coeff(0), g.term({m}).coeff(0)) << m;
  const GradedSeries one = weierstrass_pt(0, 0, ClassGrid::line(3), -1, 6);
  EXPECT_EQ(one.terms().size(), 1u);
}

TEST(Weierstrass, ExtractionRecoversTopology) {
  for (auto [chi_x, chi_s] : {std::pair{-540L, 3L}, std::pair{-12L, 2L}, std::pair{8L, -1L}}) {
    const GvExtraction x = gv_extract(weierstrass_pt(chi_x, chi_s, ClassGrid::line(3), -1, 6), 3);
    for (int m = 1; m <= 3; ++m) {
      EXPECT_EQ(x.gv.at(0, {m}), BigInt(-chi_x));
      EXPECT_EQ(x.gv.at(1, {m}), BigInt(chi_s));
      EXPECT_EQ(x.gv.at(2, {m}), BigInt(0));
      EXPECT_EQ(n_g_closed_form(x.l, 1, {m}), Rational(chi_s));
    }
    EXPECT_EQ(x.n.at(1, {1}), Rational(-chi_x));
    EXPECT_EQ(x.gv.entries.size(), chi_s == 0 ? 3u : 6u);
  }
}
