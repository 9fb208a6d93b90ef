#include <gtest/gtest.h>

#include <random>

#include "ncv/algebra/laurent_poly.hpp"
#include "ncv/algebra/poly_gcd.hpp"
#include "ncv/algebra/rational_function.hpp"
#include "ncv/algebra/series.hpp"
#include "ncv/algebra/substitute.hpp"

using namespace ncv;

namespace {

const LaurentPoly q = LaurentPoly::variable("q");
const LaurentPoly z = LaurentPoly::variable("z");
const LaurentPoly w = LaurentPoly::variable("w");
const LaurentPoly u = LaurentPoly::variable("u");

LaurentPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int terms,
                        int maxdeg, bool laurent = false) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(laurent ? -2 : 0, maxdeg);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    std::vector<std::pair<std::string, int>> powers;
    for (const auto& v : vars) powers.emplace_back(v, deg(rng));
    p += LaurentPoly::monomial(coef(rng), powers);
  }
  return p;
}

}  // namespace

TEST(LaurentPoly, Arithmetic) {
  EXPECT_EQ((q - 1) * (q + 1), q.pow(2) - 1);
  EXPECT_EQ((q.pow(2) - 1).exact_div(q - 1), q + 1);
  EXPECT_EQ(LaurentPoly::variable("q", -1) * q, LaurentPoly(1));
  EXPECT_THROW((q.pow(2) + 1).exact_div(q - 1), DivisionNotExact);
  EXPECT_THROW(q.exact_div(LaurentPoly{}), ZeroDivisor);
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_TRUE((q - q).variables().empty());
}

TEST(LaurentPoly, Rendering) {
  LaurentPoly p = 3 * q.pow(4) - 2 * q.pow(3) - 3 * q.pow(2) + 2;
  EXPECT_EQ(p.to_string(), "3*q^4 - 2*q^3 - 3*q^2 + 2");
  EXPECT_EQ(LaurentPoly::variable("q", -1).to_string(), "q^-1");
  EXPECT_EQ((z * w - LaurentPoly(Rational(1, 2)) * w).to_string(), "z*w - 1/2*w");
  EXPECT_EQ(p.to_latex(), "3q^{4} - 2q^{3} - 3q^{2} + 2");
  EXPECT_EQ(LaurentPoly{}.to_string(), "0");
}

TEST(LaurentPoly, RingAxiomsRandomized) {
  std::mt19937 rng(7);
  std::vector<std::string> vars = {"z", "w", "q"};
  for (int i = 0; i < 40; ++i) {
    auto a = random_poly(rng, vars, 4, 3, true);
    auto b = random_poly(rng, vars, 4, 3, true);
    auto c = random_poly(rng, {"w", "t"}, 3, 2, true);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a * b).exact_div(b), a);
    }
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(multivar_gcd(q.pow(2) - 1, q.pow(2) - q), q - 1);
  EXPECT_EQ(multivar_gcd(z.pow(2) + 1, z - w), LaurentPoly(1));
  EXPECT_EQ(multivar_gcd((z.pow(2) + 1) * (z - w), (z.pow(2) + 1) * (1 - w.pow(2))), z.pow(2) + 1);
}

TEST(Gcd, HeuristicAgreesWithPrs) {
  std::mt19937 rng(11);
  std::vector<std::string> vars = {"z", "w"};
  int heuristic_hits = 0;
  for (int i = 0; i < 60; ++i) {
    auto g = random_poly(rng, vars, 3, 2);
    auto a = random_poly(rng, vars, 3, 3) * g;
    auto b = random_poly(rng, {"z", "w", "q"}, 3, 2) * g;
    if (a.is_zero() || b.is_zero()) continue;
    auto prs = gcd_prs(a, b);
    auto heu = gcd_heuristic(a, b);
    if (heu) {
      ++heuristic_hits;
      EXPECT_EQ(*heu, prs) << a << " | " << b;
    }
    EXPECT_EQ(polynomial_gcd(a, b), prs);
    EXPECT_TRUE(a.try_divide(prs).has_value());
    EXPECT_TRUE(b.try_divide(prs).has_value());
  }
  EXPECT_GT(heuristic_hits, 40);
}

TEST(Gcd, CoprimeCertificate) {
  EXPECT_TRUE(coprime_fast(z.pow(2) + 1, z - w));
  EXPECT_FALSE(coprime_fast((z + w) * (z - 1), (z + w) * (w + 3)));
}

TEST(RationalFunction, Examples) {
  RationalFunction a(1, q - 1), b(1, q + 1);
  EXPECT_EQ(a + b, RationalFunction(2 * q, q.pow(2) - 1));
  EXPECT_EQ((a + b).to_string(), "2*q/(q^2 - 1)");
  EXPECT_EQ(RationalFunction(q - 1, q.pow(2) - 1), RationalFunction(1, q + 1));
  RationalFunction h(z - w, (z.pow(2) - 1) * (1 - w.pow(2)));
  EXPECT_EQ(h * RationalFunction((z.pow(2) - 1) * (1 - w.pow(2))), RationalFunction(z - w));
  EXPECT_EQ(RationalFunction(1, q - 1).to_string(), "1/(q - 1)");
  EXPECT_THROW(RationalFunction(q, LaurentPoly{}), ZeroDivisor);
  EXPECT_THROW(RationalFunction{}.inverse(), ZeroDivisor);
}

TEST(RationalFunction, CanonicalForm) {
  RationalFunction f(2 * q, 4 * q.pow(3) - 4 * q);
  EXPECT_EQ(f.den(), q.pow(2) - 1);
  EXPECT_EQ(f.num(), LaurentPoly(Rational(1, 2)));
  RationalFunction g(LaurentPoly(1), 1 - q);
  EXPECT_EQ(g.den(), q - 1);
  EXPECT_EQ(g.num(), LaurentPoly(-1));
}

TEST(RationalFunction, EqualityDecidingRandomized) {
  std::mt19937 rng(3);
  std::vector<std::string> vars = {"z", "w"};
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(rng, vars, 3, 2), b = random_poly(rng, vars, 3, 2);
    auto c = random_poly(rng, vars, 2, 2), k = random_poly(rng, vars, 2, 2);
    if (b.is_zero() || k.is_zero() || c.is_zero()) continue;
    RationalFunction x(a, b), y(a * k, b * k);
    EXPECT_EQ(x, y);
    EXPECT_EQ(RationalFunction(x.num(), x.den()), x);
    RationalFunction s(c, b + 1 == LaurentPoly{} ? LaurentPoly(1) : b + 1);
    EXPECT_EQ((x + s) - s, x);
    EXPECT_EQ((x * s) / s, x);
    EXPECT_EQ(x * (s + y), x * s + x * y);
  }
}

TEST(Series, Basics) {
  auto T = [](std::vector<Rational> c) {
    return TruncatedSeries<Rational>::from_coeffs(std::move(c), 3);
  };
  auto geo = T({1, -1}).inverse();
  EXPECT_EQ(geo.log(), T({0, 1, Rational(1, 2), Rational(1, 3)}));
  EXPECT_EQ(T({0, 1}).exp()[2], Rational(1, 2));
  TruncatedSeries<LaurentPoly> f(2);
  f.set(0, 1);
  f.set(1, -q);
  auto inv = f.inverse();
  EXPECT_EQ(inv[0], LaurentPoly(1));
  EXPECT_EQ(inv[1], q);
  EXPECT_EQ(inv[2], q.pow(2));
  EXPECT_THROW(T({2, 1}).log(), LogOfNonUnit);
  EXPECT_THROW(T({1, 1}).exp(), ExpOfNonzeroConstant);
  EXPECT_THROW(T({0, 1}).inverse(), InverseOfNonUnit);
}

TEST(Series, ExpLogRoundTrip) {
  std::mt19937 rng(5);
  for (int i = 0; i < 5; ++i) {
    TruncatedSeries<RationalFunction> g(6);
    for (int d = 1; d <= 6; ++d)
      g.set(d, RationalFunction(random_poly(rng, {"q"}, 2, 2), q + d));
    EXPECT_EQ(g.exp().log(), g);
    auto f = g.exp();
    EXPECT_EQ(f.log().exp(), f);
  }
}

TEST(Substitute, Examples) {
  SubstitutionMap m{{"z", u}, {"w", LaurentPoly::variable("u", -1)}};
  EXPECT_EQ(substitute(z - w, m), u - LaurentPoly::variable("u", -1));
  EXPECT_EQ(substitute(q.pow(2) + q + 2, {{"q", LaurentPoly(3)}}), LaurentPoly(14));
  RationalFunction f(1, z.pow(2) + 1);
  auto g = substitute(f, m);
  EXPECT_EQ(halve_exponents(g, "u", "q"), RationalFunction(1, q + 1));
  EXPECT_THROW(halve_exponents(substitute(RationalFunction(z - w), m), "u", "q"), OddPowersRemain);
}

TEST(Substitute, CommutesWithArithmetic) {
  std::mt19937 rng(9);
  SubstitutionMap m{{"z", u * LaurentPoly::variable("t")}, {"w", -LaurentPoly::variable("u", -1)}};
  for (int i = 0; i < 20; ++i) {
    auto a = random_poly(rng, {"z", "w"}, 3, 2, true), b = random_poly(rng, {"z", "w"}, 3, 2, true);
    EXPECT_EQ(substitute(a * b, m), substitute(a, m) * substitute(b, m));
    EXPECT_EQ(substitute(a + b, m), substitute(a, m) + substitute(b, m));
  }
}
