#include <gtest/gtest.h>

#include <cstdlib>

#include "ncv/nonorient/orbits.hpp"
#include "ncv/nonorient/zseries.hpp"
#include "ncv/oracle/compare.hpp"
#include "ncv/oracle/counts.hpp"
#include "ncv/oracle/finite_field.hpp"
#include "ncv/oracle/group_table.hpp"
#include "ncv/oracle/orbit_oracle.hpp"
#include "ncv/parallel.hpp"

using namespace ncv;

namespace {

long class_total(const GroupTable& G) {
  long s = 0;
  for (int c = 0; c < G.num_classes(); ++c) s += G.class_size(c);
  return s;
}

// Elements of the conjugacy class of g, listed directly.
std::vector<int> class_members(const GroupTable& G, int g) {
  std::vector<bool> seen(G.size(), false);
  std::vector<int> out;
  for (int x = 0; x < G.size(); ++x) {
    int y = G.mul(G.mul(x, g), G.inv(x));
    if (!seen[y]) {
      seen[y] = true;
      out.push_back(y);
    }
  }
  return out;
}

class ScopedThreads {
 public:
  explicit ScopedThreads(const char* n) {
    if (const char* old = std::getenv("NCV_THREADS")) saved_ = old;
    setenv("NCV_THREADS", n, 1);
  }
  ~ScopedThreads() {
    if (saved_.empty())
      unsetenv("NCV_THREADS");
    else
      setenv("NCV_THREADS", saved_.c_str(), 1);
  }

 private:
  std::string saved_;
};

}  // namespace

TEST(FiniteField, Construction) {
  EXPECT_THROW(FiniteField(4), RangeError);
  EXPECT_THROW(FiniteField(2), RangeError);
  EXPECT_THROW(FiniteField(6), RangeError);
  EXPECT_THROW(FiniteField(1), RangeError);
  FiniteField F9(9);
  EXPECT_EQ(F9.characteristic(), 3);
  EXPECT_EQ(F9.degree(), 2);
  EXPECT_EQ(F9.modulus().size(), 3u);
}

TEST(FiniteField, AxiomsExhaustive) {
  for (int q : {3, 5, 9, 25, 27}) {
    FiniteField F(q);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0);
      EXPECT_EQ(F.mul(a, 1), a);
      if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        int c = (a * 7 + b * 3) % q;
        EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      }
    }
    // Frobenius is additive and has order e.
    for (int a = 0; a < q; ++a) {
      int x = a;
      for (int i = 0; i < F.degree(); ++i) x = F.frobenius(x);
      EXPECT_EQ(x, a);
      EXPECT_EQ(F.frobenius(F.add(a, 1)), F.add(F.frobenius(a), 1));
    }
  }
}

TEST(GroupTable, Orders) {
  GroupTable g15(1, 5);
  EXPECT_EQ(g15.size(), 4);
  EXPECT_EQ(g15.num_classes(), 4);
  GroupTable g23(2, 3);
  EXPECT_EQ(g23.size(), 48);
  EXPECT_EQ(class_total(g23), 48);
  GroupTable g25(2, 5);
  EXPECT_EQ(g25.size(), 480);
  EXPECT_EQ(class_total(g25), 480);
  EXPECT_EQ(g25.num_classes(), 24);  // q^2 - 1 classes of GL_2(F_q)
  EXPECT_THROW(GroupTable(3, 3, 1000), BudgetExceeded);
}

TEST(GroupTable, Involution) {
  GroupTable G(2, 3);
  for (int a = 0; a < G.size(); ++a) {
    EXPECT_EQ(G.sigma(G.sigma(a)), a);
    EXPECT_EQ(G.mul(a, G.inv(a)), G.identity());
    for (int b = 0; b < G.size(); b += 5) EXPECT_EQ(G.sigma(G.mul(a, b)), G.mul(G.sigma(a), G.sigma(b)));
  }
}

TEST(Eta, Examples) {
  GroupTable G(1, 5);
  ClassFunction sq = eta_counts(G, Twist::untwisted);
  auto at = [&](const ClassFunction& f, int v) { return f[G.class_of(G.index_of({v}))]; };
  EXPECT_EQ(at(sq, 1), 2);
  EXPECT_EQ(at(sq, 4), 2);
  EXPECT_EQ(at(sq, 2), 0);
  EXPECT_EQ(at(sq, 3), 0);
  for (int q : {3, 5, 7, 9}) {
    GroupTable H(1, q);
    ClassFunction tw = eta_counts(H, Twist::twisted);
    for (int c = 0; c < H.num_classes(); ++c) EXPECT_EQ(tw[c], c == H.class_of(H.identity()) ? q - 1 : 0);
  }
  GroupTable G23(2, 3);
  ClassFunction e = eta_counts(G23, Twist::untwisted);
  Integer total = 0;
  for (int c = 0; c < G23.num_classes(); ++c) total += e[c] * G23.class_size(c);
  EXPECT_EQ(total, 48);
  EXPECT_EQ(e[G23.class_of(G23.identity())], 14);
  ClassFunction et = eta_counts(G23, Twist::twisted);
  total = 0;
  for (int c = 0; c < G23.num_classes(); ++c) total += et[c] * G23.class_size(c);
  EXPECT_EQ(total, 48);
}

TEST(RepCount, UntwistedBruteForce) {
  GroupTable G(2, 3);
  EXPECT_EQ(rep_count(G, Twist::untwisted, 2, {}), 288);
  long triples = 0;
  for (int a = 0; a < G.size(); ++a) {
    int a2 = G.mul(a, a);
    for (int b = 0; b < G.size(); ++b) {
      int ab = G.mul(a2, G.mul(b, b));
      for (int c = 0; c < G.size(); ++c)
        if (G.mul(ab, G.mul(c, c)) == G.identity()) ++triples;
    }
  }
  EXPECT_EQ(triples, 7872);
  EXPECT_EQ(rep_count(G, Twist::untwisted, 3, {}), triples);
  EXPECT_EQ(e_count_nonorient(1, 2).evaluate_at("q", 3), Rational(164));
  EXPECT_EQ(make_rational(triples, 48), Rational(164));
}

TEST(RepCount, TwistedBruteForce) {
  for (int q : {3, 5}) {
    GroupTable G(2, q);
    int minus = G.field().neg(1);
    int x = G.index_of(G.diagonal({minus, minus}));
    std::vector<int> members = class_members(G, x);
    long count = 0;
    for (int a = 0; a < G.size(); ++a) {
      int e = G.mul(a, G.sigma(a));
      for (int y : members)
        if (G.mul(e, y) == G.identity()) ++count;
    }
    EXPECT_EQ(rep_count(G, Twist::twisted, 1, {G.class_of(x)}), count) << q;
  }
  GroupTable G(2, 5);
  int c = G.class_of(G.index_of(G.diagonal({2, 3})));
  EXPECT_EQ(rep_count(G, Twist::twisted, 1, {c}), 120);
  EXPECT_THROW(rep_count(G, Twist::twisted, 0, {}), RangeError);
}

TEST(RepCount, FormulaCaseA) {
  for (int n : {1, 2})
    for (int q : {3, 5})
      for (int r = 1; r <= 3; ++r) {
        OracleComparison c = nonorient_oracle(n, q, r);
        EXPECT_TRUE(c.equal()) << n << " " << q << " " << r << ": " << c.count << " vs " << c.e_count;
      }
}

TEST(RepCount, FormulaCaseB) {
  for (int q : {3, 5, 7}) EXPECT_TRUE(punctured_oracle(1, q, class_spec_from_eigenvalues({{1}})).equal()) << q;
  for (int q : {5, 7}) {
    FiniteField F(q);
    int m = F.neg(1);
    EXPECT_TRUE(punctured_oracle(1, q, class_spec_from_eigenvalues({{m, m}})).equal());
    for (int xi = 2; xi < q; ++xi)
      if (xi != m) EXPECT_TRUE(punctured_oracle(1, q, class_spec_from_eigenvalues({{xi, F.inv(xi)}})).equal()) << xi;
  }
  OracleComparison c = punctured_oracle(1, 5, class_spec_from_eigenvalues({{2, 3}}));
  EXPECT_EQ(c.count, 120);
  EXPECT_EQ(c.e_count, Rational(1, 4));
  EXPECT_THROW(punctured_oracle(1, 5, class_spec_from_eigenvalues({{1, 1}})), RangeError);
}

TEST(Correspondence, Examples) {
  GroupTable G(2, 3);
  Correspondence c = correspondence_check(G, G.identity());
  EXPECT_TRUE(c.equal());
  EXPECT_EQ(c.count_a, 384);
  int h = G.index_of(G.diagonal({1, 2}));
  EXPECT_TRUE(correspondence_check(G, h).equal());
  for (int q : {3, 5, 7}) {
    GroupTable A(1, q);
    Correspondence a = correspondence_check(A, A.identity());
    EXPECT_EQ(a.count_a, (q - 1) * (q - 1));
    EXPECT_EQ(a.count_b, (q - 1) * (q - 1));
  }
}

TEST(Orbits, PropOracleOnFields) {
  // F_25^x with x -> x^5 and x -> 1/x, and F_81^x with x -> x^3.
  for (auto [q, p] : {std::pair{25, 5}, {81, 3}, {49, 7}}) {
    FiniteField F(q);
    std::vector<int> frob(q - 1), inv(q - 1);
    for (int k = 0; k < q - 1; ++k) {
      int x = F.exp(k);
      frob[k] = F.log(F.pow(x, p));
      inv[k] = F.log(F.inv(x));
    }
    CheckReport rep = orbit_prop_oracle(frob, inv);
    for (const auto& r : rep.results) EXPECT_TRUE(r.passed) << q << " " << r.name << " " << r.detail;
  }
}

TEST(Orbits, PropOracleTrivialSigma) {
  // A permutation with cycles of lengths 1, 2, 2, 3 and sigma = id.
  std::vector<int> F{0, 2, 1, 4, 3, 6, 7, 5};
  std::vector<int> id{0, 1, 2, 3, 4, 5, 6, 7};
  CheckReport rep = orbit_prop_oracle(F, id);
  EXPECT_TRUE(rep.passed());
  std::vector<int> bad{1, 0, 2, 3, 4, 5, 6, 7};
  EXPECT_THROW(orbit_prop_oracle(F, bad), RangeError);
}

TEST(Orbits, MultiplicativeGroupExamples) {
  OrbitTally t5 = gamma_orbit_oracle(5, 2);
  EXPECT_EQ(t5.fixed[1], 2);
  EXPECT_EQ(t5.twisted[1], 2);
  EXPECT_EQ(t5.inf[1], 1);
  EXPECT_EQ(t5.sharp[1], 2);
  EXPECT_EQ(gamma_orbit_oracle(3, 1).inf[1], 0);
  for (int q : {3, 5, 7}) {
    CheckReport rep = gamma_orbit_check(q, 4);
    for (const auto& r : rep.results) EXPECT_TRUE(r.passed) << q << " " << r.name << " " << r.detail;
  }
  EXPECT_THROW(gamma_orbit_oracle(101, 4), BudgetExceeded);
}

TEST(Parallel, ResultsIndependentOfWorkers) {
  GroupTable G(2, 5);
  Correspondence base{0, 0};
  OrbitTally tally;
  Integer count;
  {
    ScopedThreads one("1");
    EXPECT_EQ(thread_count(), 1);
    base = correspondence_check(G, G.identity());
    tally = gamma_orbit_oracle(5, 3);
    count = rep_count(GroupTable(2, 7), Twist::untwisted, 2, {});
  }
  for (const char* n : {"2", "3", "7"}) {
    ScopedThreads scoped(n);
    EXPECT_EQ(thread_count(), std::atoi(n));
    Correspondence c = correspondence_check(G, G.identity());
    EXPECT_EQ(c.count_a, base.count_a);
    EXPECT_EQ(c.count_b, base.count_b);
    OrbitTally t = gamma_orbit_oracle(5, 3);
    EXPECT_EQ(t.fixed, tally.fixed);
    EXPECT_EQ(t.twisted, tally.twisted);
    EXPECT_EQ(t.inf, tally.inf);
    EXPECT_EQ(rep_count(GroupTable(2, 7), Twist::untwisted, 2, {}), count);
  }
  ScopedThreads junk("zero");
  EXPECT_GE(thread_count(), 1);
}

TEST(Parallel, RethrowsWorkerErrors) {
  EXPECT_THROW(parallel_for(
                   10, [](long b, long, int) {
                     if (b > 0) throw RangeError("worker");
                   },
                   3),
               RangeError);
}
