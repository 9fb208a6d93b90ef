#include <gtest/gtest.h>

#include "ncv/algebra/substitute.hpp"
#include "ncv/punctured/cauchy.hpp"
#include "ncv/punctured/checks.hpp"
#include "ncv/punctured/class_spec.hpp"
#include "ncv/punctured/hh.hpp"

using namespace ncv;

namespace {

using RF = RationalFunction;

const LaurentPoly z = LaurentPoly::variable("z");
const LaurentPoly w = LaurentPoly::variable("w");
const LaurentPoly q = LaurentPoly::variable("q");
const LaurentPoly t = LaurentPoly::variable("t");

PartitionTuple mu(const char* s) { return parse_partition_tuple(s); }

LaurentPoly cell_denominator() { return (z.pow(2) - 1) * (1 - w.pow(2)); }

std::vector<PartitionTuple> tuples(int k, int n) {
  std::vector<PartitionTuple> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<PartitionTuple> next;
    for (const auto& prefix : out)
      for (const auto& lam : partitions_of(n)) {
        auto m = prefix;
        m.push_back(lam);
        next.push_back(m);
      }
    out = std::move(next);
  }
  return out;
}

// Multiplication in Z/m, eigenvalues as residues.
struct ModMul {
  int m;
  int operator()(int a, int b) const { return a * b % m; }
};

}  // namespace

TEST(Cauchy, LowDegreeSlices) {
  for (int k = 1; k <= 2; ++k) {
    SymSeries omega = cauchy_omega(1, k, 2);
    EXPECT_TRUE(omega[0].is_one());
  }
  SymSeries o1 = cauchy_omega(1, 1, 1);
  EXPECT_EQ(o1[1].coefficient(Basis::m, {Partition{1}}), RF(z - w, cell_denominator()));
  SymSeries o2 = cauchy_omega(2, 1, 1);
  EXPECT_EQ(o2[1].coefficient(Basis::m, {Partition{1}}), RF((z - w).pow(2), cell_denominator()));
  EXPECT_THROW(cauchy_omega(0, 1, 2), RangeError);
  EXPECT_THROW(cauchy_omega(1, 1, kMacdonaldBound + 1), BoundExceeded);
}

TEST(HH, RankOneLemma) {
  EXPECT_EQ(hh_mu(1, 1, mu("1")), RF(z - w));
  EXPECT_EQ(hh_mu(1, 1, mu("2")), RF(LaurentPoly(1), z.pow(2) + 1));
  EXPECT_EQ(hh_mu(1, 1, mu("1,1")), RF(1));
  EXPECT_TRUE(conjecture_checks("lemma_rk1", 2).passed());
}

TEST(HH, SingleCellAnyK) {
  // In degree 1, Log Omega equals Omega, whose only term is H_{r,(1)} m_1 x ... x m_1.
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 3; ++k) {
      PartitionTuple ones(static_cast<std::size_t>(k), Partition{1});
      EXPECT_EQ(hh_mu(r, k, ones), RF((z - w).pow(static_cast<unsigned>(r)))) << r << " " << k;
    }
}

TEST(HH, DimensionOffsets) {
  EXPECT_EQ(d_mu(1, 1, mu("1")), 1);
  EXPECT_EQ(d_mu(1, 1, mu("2")), -2);
  EXPECT_EQ(d_mu(1, 1, mu("1,1")), 0);
  EXPECT_EQ(d_mu(2, 2, mu("2,1|3")), 9 * 2 + 2 - 5 - 9);
}

TEST(HH, Validation) {
  EXPECT_THROW(hh_mu(1, 2, mu("1")), RangeError);
  EXPECT_THROW(hh_mu(1, 1, {Partition{}}), RangeError);
  EXPECT_THROW(parse_partition_tuple("2|1"), ParseError);
  EXPECT_THROW(parse_partition_tuple("1,2"), ParseError);
}

TEST(ECount, ClosedForms) {
  RF one(1);
  EXPECT_EQ(e_count_punctured(1, 1, mu("1")), one);
  EXPECT_EQ(e_count_punctured(1, 1, mu("2")), RF(LaurentPoly(1), q * (q.pow(2) - 1)));
  EXPECT_EQ(e_count_punctured(1, 1, mu("1,1")), RF(LaurentPoly(1), q - 1));

  LaurentPoly x = LaurentPoly::monomial(1, {{"q", 1}, {"t", 2}});
  EXPECT_EQ(mixed_poincare(1, 1, mu("1")), RF(t + x, x - 1));
  EXPECT_EQ(mixed_poincare(1, 1, mu("2")), RF(LaurentPoly(1), x * (x - 1) * (x + 1)));
  EXPECT_EQ(mixed_poincare(1, 1, mu("1,1")), RF(LaurentPoly(1), x - 1));
}

TEST(ECount, MixedAtMinusOne) {
  for (int r = 1; r <= 2; ++r)
    for (int k = 1; k <= 2; ++k)
      for (int n = 1; n <= 3; ++n)
        for (const auto& m : tuples(k, n))
          EXPECT_EQ(mixed_poincare(r, k, m).evaluate_at("t", -1), e_count_punctured(r, k, m))
              << r << " " << to_string(m);
}

TEST(ECount, HookSideIsLaurentInQ) {
  // (q - 1) e_count = q^{d/2} HH(sqrt q, 1/sqrt q) has no denominator for r >= 2.
  for (int r = 2; r <= 3; ++r)
    for (int k = 1; k <= 2; ++k)
      for (int n = 1; n <= (k == 1 ? 3 : 2); ++n)
        for (const auto& m : tuples(k, n)) {
          RF scaled = e_count_punctured(r, k, m) * RF(q - 1);
          EXPECT_TRUE(scaled.is_polynomial()) << r << " " << to_string(m) << " " << scaled;
        }
}

TEST(Genericity, Examples) {
  ModMul f5{5};
  ClassSpec<int> s;
  s.classes = {{{2, 1}, {3, 1}}};
  EXPECT_TRUE(is_generic(s, f5, 1).generic);
  EXPECT_EQ(to_string(s.mu()), "1,1");

  s.classes = {{{4, 2}}};
  EXPECT_TRUE(is_generic(s, f5, 1).generic);
  EXPECT_EQ(to_string(s.mu()), "2");

  s.classes = {{{1, 2}}};
  auto g = is_generic(s, f5, 1);
  EXPECT_FALSE(g.generic);
  ASSERT_EQ(g.witness.size(), 1u);
  EXPECT_EQ(g.witness[0], std::vector<int>{1});

  s.classes = {{{2, 1}, {2, 1}}};
  g = is_generic(s, f5, 1);
  EXPECT_FALSE(g.generic);
  EXPECT_NE(g.reason.find("determinants"), std::string::npos);

  // Two classes: {2,3} and {4,4} over F_5; 2*4 = 3 and 3*4 = 2, never 1.
  s.classes = {{{2, 1}, {3, 1}}, {{4, 2}}};
  EXPECT_TRUE(is_generic(s, f5, 1).generic);
  // {2,3} and {3,2}: choosing 2 and 3 gives 6 = 1.
  s.classes = {{{2, 1}, {3, 1}}, {{3, 1}, {2, 1}}};
  EXPECT_FALSE(is_generic(s, f5, 1).generic);

  s.classes = {{{2, 1}}, {{2, 2}}};
  EXPECT_THROW(s.n(), RangeError);
}

TEST(Conjecture, DeskScale) {
  CheckReport c = conjecture_checks("conj_0conj", 4);
  for (const auto& r : c.results) EXPECT_TRUE(r.passed) << r.name << " " << r.detail;
  EXPECT_TRUE(conjecture_checks("sign_symmetry", 5).passed());
  EXPECT_TRUE(conjecture_checks("euler_spec", 5).passed());
  EXPECT_THROW(conjecture_checks("nope", 3), ParseError);
  EXPECT_THROW(conjecture_checks("conj_0conj", kMacdonaldBound + 1), BoundExceeded);
}

TEST(Conjecture, EulerSpecSingleCell) {
  // (u - 1/u) / ((u^2 - 1)(1 - u^-2)) = u / (u^2 - 1)
  LaurentPoly u = LaurentPoly::variable("u");
  RF h = substitute(deformed_hook(1, Partition{1}), {{"z", u}, {"w", LaurentPoly::variable("u", -1)}});
  EXPECT_EQ(h, RF(u, u.pow(2) - 1));
}

TEST(Conjecture, Denominators) {
  CheckReport d = conjecture_checks("denominators", 4);
  for (const auto& r : d.results) EXPECT_TRUE(r.passed) << r.name << " " << r.detail;
}
