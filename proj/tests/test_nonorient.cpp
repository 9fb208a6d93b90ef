#include <gtest/gtest.h>

#include <random>

#include "ncv/nonorient/maintheo.hpp"
#include "ncv/nonorient/orbits.hpp"
#include "ncv/nonorient/qseries.hpp"
#include "ncv/nonorient/verify.hpp"
#include "ncv/nonorient/zseries.hpp"

using namespace ncv;

namespace {

const LaurentPoly q = LaurentPoly::variable("q");

LaurentPoly poly(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += LaurentPoly::variable("q", e).scaled(c);
  return p;
}

// q-Pascal recursion [n,r] = [n-1,r-1] + q^r [n-1,r].
LaurentPoly pascal(int n, int r) {
  if (r == 0 || r == n) return LaurentPoly(1);
  return pascal(n - 1, r - 1) + q.pow(static_cast<unsigned>(r)) * pascal(n - 1, r);
}

std::vector<long> partition_counts(int N) {
  std::vector<long> p(N + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= N; ++part)
    for (int n = part; n <= N; ++n) p[n] += p[n - part];
  return p;
}

}  // namespace

TEST(QSeries, Binomials) {
  EXPECT_EQ(q_binomial(2, 1), q + 1);
  EXPECT_EQ(q_binomial(4, 2), poly({{4, 1}, {3, 1}, {2, 2}, {1, 1}, {0, 1}}));
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(q_binomial(n, 0), LaurentPoly(1));
    for (int r = 0; r <= n; ++r) EXPECT_EQ(q_binomial(n, r), pascal(n, r));
  }
  EXPECT_THROW(q_binomial(2, 3), RangeError);
  EXPECT_THROW(q_binomial(-1, 0), RangeError);
}

TEST(QSeries, InvolutionCounts) {
  EXPECT_EQ(involution_count(1), LaurentPoly(2));
  EXPECT_EQ(involution_count(2), poly({{2, 1}, {1, 1}, {0, 2}}));
  EXPECT_EQ(involution_count(3), poly({{4, 2}, {3, 2}, {2, 2}, {0, 2}}));
  EXPECT_EQ(involution_count(4), poly({{8, 1}, {7, 1}, {6, 4}, {5, 3}, {4, 3}, {3, 2}, {0, 2}}));
  EXPECT_EQ(involution_count(5),
            poly({{12, 2}, {11, 2}, {10, 4}, {9, 4}, {8, 6}, {7, 4}, {6, 4}, {5, 2}, {4, 2}, {0, 2}}));
  for (int n = 0; n <= 8; ++n) {
    auto I = involution_count(n);
    for (const auto& t : I.terms()) {
      EXPECT_GT(t.coeff, 0);
      if (n % 2) EXPECT_TRUE(is_integer(t.coeff / 2));
    }
  }
}

TEST(QSeries, Series) {
  RFSeries I = i_series(6);
  EXPECT_EQ(I[1], RationalFunction(LaurentPoly(2), 1 - q));
  RFSeries Istar = i_star_series(6);
  RFSeries x_only = Istar.map([](const RationalFunction& c) {
    return substitute(c, {{"Y", LaurentPoly(0)}});
  });
  for (int r = 0; r <= 6; ++r)
    EXPECT_EQ(x_only[r], RationalFunction(LaurentPoly::variable("X", r), q_pochhammer(r)));
  EXPECT_EQ(gl_order(2).evaluate_at("q", 3), 48);
}

TEST(Verify, AllIdentities) {
  for (const auto& name : identity_names()) {
    int N = name == "i_log" ? 10 : name == "i_star_product" ? 8 : 6;
    CheckReport rep = verify_identity(name, N);
    EXPECT_TRUE(rep.passed()) << name;
    for (const auto& r : rep.results) EXPECT_TRUE(r.passed) << name << ": " << r.name << " " << r.detail;
  }
  EXPECT_THROW(verify_identity("nope", 6), ParseError);
  EXPECT_THROW(verify_identity("i_log", 3), RangeError);
}

TEST(ZSeries, Coefficients) {
  RFSeries z0 = z_series(0, 8);
  auto counts = partition_counts(8);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(z0[n], RationalFunction(counts[n]));
  EXPECT_EQ(z_series(1, 2)[2], RationalFunction((q.pow(2) - 1).pow(2), q));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(v_coeff(0, n), RationalFunction(1));
  EXPECT_EQ(v_coeff(-1, 1), RationalFunction(1, q - 1));
  EXPECT_EQ(v_coeff(-1, 2), RationalFunction(1, (q.pow(2) - 1) * (q - 1)));
  EXPECT_EQ(v_coeff_k(0, 2, 2), RationalFunction(Rational(3, 2)));
  EXPECT_EQ(v_coeff_k(0, 3, 2), RationalFunction(1));
  EXPECT_EQ(v_coeff_k(0, 4, 2), RationalFunction(Rational(7, 4)));
}

TEST(ZSeries, WCoefficients) {
  EXPECT_EQ(w_coeff(0, 1), RationalFunction(2));
  EXPECT_EQ(w_coeff(0, 2), RationalFunction(q));
  EXPECT_EQ(w_coeff(0, 3), RationalFunction(2));
  EXPECT_EQ(w_coeff(0, 4), RationalFunction(q));
  EXPECT_EQ(w_coeff(-1, 1), RationalFunction(2, q - 1));
  EXPECT_EQ(w_coeff(-1, 2), RationalFunction(1, q + 1));
  EXPECT_EQ(w_coeff(1, 1), RationalFunction((q - 1).scaled(2)));
}

TEST(MSeries, PointCounts) {
  EXPECT_EQ(e_count_nonorient(1, 1), RationalFunction(q.scaled(2) - 2));
  EXPECT_EQ(e_count_nonorient(1, 2), RationalFunction(poly({{4, 3}, {3, -2}, {2, -3}, {0, 2}})));
  EXPECT_EQ(e_count_nonorient(1, 3),
            RationalFunction(poly({{9, 2}, {8, -2}, {7, 4}, {6, -12}, {5, 10}, {4, -6}, {3, 6}, {2, -2}, {1, 2}, {0, -2}})));
  const RFSeries& m0 = m_series(0, 4);
  EXPECT_EQ(m0[1], RationalFunction(2));
  EXPECT_EQ(m0[2], RationalFunction(q + 3));
  EXPECT_EQ(m0[3], RationalFunction(q.scaled(2) + 6));
  EXPECT_EQ(m0[4], RationalFunction(q.pow(2) + q.scaled(4) + 9));
  EXPECT_EQ(e_count_nonorient(-1, 2).evaluate_at("q", 3), Rational(7, 24));
  EXPECT_EQ(e_count_nonorient(0, 2).evaluate_at("q", 3), 6);
}

TEST(MSeries, IntegralityAndParity) {
  for (int rho = 0; rho <= 3; ++rho)
    for (int n = 1; n <= 6; ++n) {
      RationalFunction e;
      ASSERT_NO_THROW(e = e_count_nonorient(rho, n)) << rho << "," << n;
      EXPECT_TRUE(e.is_polynomial() && e.num().has_integer_coefficients());
      if (rho >= 1 && n % 2)
        for (const auto& t : e.num().terms()) EXPECT_TRUE(is_integer(t.coeff / 2)) << rho << "," << n;
    }
}

TEST(MSeries, LeadingCoefficientTable) {
  std::vector<std::vector<Integer>> expected{
      {2, 1, 2, 1, 2}, {2, 1, 2, 1, 2}, {2, 3, 2, 2, 2}, {2, 2, 2, 2, 2}, {2, 2, 2, 2, 2}};
  EXPECT_EQ(leading_coefficient_table(5, 5), expected);
}

TEST(Orbits, MultiplicativeGroup) {
  OrbitCounts c = gamma_counts_gm(6);
  EXPECT_EQ(c.fixed[1], RationalFunction(2));
  for (int d = 2; d <= 6; ++d) EXPECT_TRUE(c.fixed[d].is_zero());
  EXPECT_EQ(c.twisted[1], RationalFunction((q - 1).scaled(Rational(1, 2))));
  EXPECT_EQ(c.sharp[1], RationalFunction(q - 3));
  EXPECT_EQ(c.inf[1], RationalFunction((q - 3).scaled(Rational(1, 2))));
  EXPECT_EQ(c.twisted[1].evaluate_at("q", 5), 2);
  // Every count is an integer at odd prime powers.
  for (int qq : {3, 5, 7, 9, 11})
    for (int d = 1; d <= 6; ++d)
      for (const auto* v : {&c.fixed, &c.twisted, &c.sharp, &c.inf}) {
        Rational x = (*v)[d].evaluate_at("q", qq).constant_value();
        EXPECT_TRUE(is_integer(x) && x >= 0) << qq << " " << d;
      }
}

TEST(ProductFormula, MatchesMSeries) {
  for (int rho : {-1, 0, 1, 2}) {
    RFSeries p = product_formula_m(rho, 6);
    const RFSeries& m = m_series(rho, 6);
    EXPECT_EQ(p.first_difference(m), -1) << "rho=" << rho;
  }
  RFSeries p0 = product_formula_m(0, 4);
  EXPECT_EQ(p0[4], RationalFunction(q.pow(2) + q.scaled(4) + 9));
}

TEST(ProductFormula, LogClosedForms) {
  RFSeries z1 = z_series(1, 6), z2 = z_series(2, 6);
  CheckReport gm = maintheo_check(gm_datum(), z1, z1, z2, 6);
  for (const auto& r : gm.results) EXPECT_TRUE(r.passed) << r.name << " " << r.detail;

  std::mt19937 rng(20241);
  for (int trial = 0; trial < 3; ++trial) {
    GammaDatum g = random_gamma_datum(rng);
    RFSeries o0 = random_unit_series(rng, 6), o1 = random_unit_series(rng, 6), oi = random_unit_series(rng, 6);
    CheckReport rep = maintheo_check(g, o0, o1, oi, 6);
    for (const auto& r : rep.results) EXPECT_TRUE(r.passed) << trial << " " << r.name << " " << r.detail;
  }

  GammaDatum no_twist{LaurentPoly(3), LaurentPoly(), q + 1};
  RFSeries o = random_unit_series(rng, 6);
  TripleProduct t = triple_product(no_twist, o, o, o, 6);
  EXPECT_EQ(t.f1.first_difference(RFSeries::one(6)), -1);
  EXPECT_TRUE(maintheo_check(no_twist, o, o, o, 6).passed());
}
