#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncv/check.hpp"
#include "ncv/nonorient/maintheo.hpp"
#include "ncv/nonorient/qseries.hpp"
#include "ncv/nonorient/verify.hpp"
#include "ncv/nonorient/zseries.hpp"
#include "ncv/oracle/compare.hpp"
#include "ncv/oracle/orbit_oracle.hpp"
#include "ncv/punctured/checks.hpp"
#include "ncv/punctured/hh.hpp"

namespace ncv {

/// Desk-scale acceptance suite. Each criterion is one CheckReport; without
/// `quick` the brute-force criteria also run a few larger fields and degrees.
struct SuiteOptions {
  bool quick = false;
  unsigned seed = 20241;
};

struct Criterion {
  int id;
  std::string name;
  double seconds_limit;
  std::function<CheckReport(const SuiteOptions&)> run;
};

namespace suite {

inline LaurentPoly qpoly(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += qvar(e).scaled(c);
  return p;
}

inline RationalFunction qt2() {
  return RationalFunction(LaurentPoly::monomial(1, {{"q", 1}, {"t", 2}}));
}

inline void expect_equal(CheckReport& rep, const std::string& name, const RationalFunction& got,
                         const RationalFunction& want) {
  rep.add(name, got == want, got == want ? got.to_string() : got.to_string() + " vs " + want.to_string());
}

inline std::string count_detail(const OracleComparison& c) {
  return "count " + c.count.get_str() + ", |G| " + c.group_order.get_str() + ", e_count " + to_string(c.e_count);
}

inline CheckReport involutions(const SuiteOptions&) {
  CheckReport rep{"involution table", {}};
  std::vector<LaurentPoly> want{
      LaurentPoly(2),
      qpoly({{2, 1}, {1, 1}, {0, 2}}),
      qpoly({{4, 2}, {3, 2}, {2, 2}, {0, 2}}),
      qpoly({{8, 1}, {7, 1}, {6, 4}, {5, 3}, {4, 3}, {3, 2}, {0, 2}}),
      qpoly({{12, 2}, {11, 2}, {10, 4}, {9, 4}, {8, 6}, {7, 4}, {6, 4}, {5, 2}, {4, 2}, {0, 2}})};
  for (int n = 1; n <= 5; ++n) expect_equal(rep, "I_" + std::to_string(n), involution_count(n), want[n - 1]);
  return rep;
}

inline CheckReport identities(const SuiteOptions&) {
  CheckReport rep{"q-series identities", {}};
  const std::map<std::string, int> degree{{"i_log", 10},    {"i_star_log", 8}, {"i_star_product", 8},
                                          {"z_minus1", 8}, {"m_minus1", 8},   {"m0_product", 10}};
  for (const auto& name : identity_names()) {
    for (auto r : verify_identity(name, degree.at(name)).results) {
      r.name = name + ": " + r.name;
      rep.results.push_back(r);
    }
  }
  return rep;
}

inline CheckReport pipeline(const SuiteOptions&) {
  CheckReport rep{"counting pipeline", {}};
  std::vector<LaurentPoly> want{
      qpoly({{1, 2}, {0, -2}}),
      qpoly({{4, 3}, {3, -2}, {2, -3}, {0, 2}}),
      qpoly({{9, 2}, {8, -2}, {7, 4}, {6, -12}, {5, 10}, {4, -6}, {3, 6}, {2, -2}, {1, 2}, {0, -2}})};
  for (int n = 1; n <= 3; ++n)
    expect_equal(rep, "e_count(1," + std::to_string(n) + ")", e_count_nonorient(1, n), want[n - 1]);
  std::vector<LaurentPoly> m0{LaurentPoly(1), LaurentPoly(2), qpoly({{1, 1}, {0, 3}}), qpoly({{1, 2}, {0, 6}}),
                              qpoly({{2, 1}, {1, 4}, {0, 9}})};
  const RFSeries& m = m_series(0, 4);
  for (int n = 0; n <= 4; ++n) expect_equal(rep, "M_0 T^" + std::to_string(n), m[n], m0[n]);
  for (int rho : {-1, 0, 1, 2}) {
    std::string why = detail::series_mismatch(product_formula_m(rho, 6), m_series(rho, 6));
    rep.add("product formula rho=" + std::to_string(rho), why.empty(), why);
  }
  return rep;
}

inline CheckReport integrality(const SuiteOptions&) {
  CheckReport rep{"integrality", {}};
  for (int rho = 0; rho <= 3; ++rho)
    for (int n = 1; n <= 6; ++n) {
      std::string name = "rho=" + std::to_string(rho) + " n=" + std::to_string(n);
      try {
        RationalFunction e = e_count_nonorient(rho, n);
        rep.add(name, true);
        if (rho > 0 && n % 2) {
          bool even = true;
          for (const auto& t : e.num().terms()) even = even && is_integer(t.coeff / 2);
          rep.add(name + " even", even, even ? "all coefficients even" : e.to_string(), true);
        }
      } catch (const IntegralityViolation& ex) {
        rep.add(name, false, ex.what());
      }
    }
  return rep;
}

inline CheckReport leading_coefficients(const SuiteOptions&) {
  CheckReport rep{"leading coefficients", {}};
  std::vector<std::vector<Integer>> want{
      {2, 1, 2, 1, 2}, {2, 1, 2, 1, 2}, {2, 3, 2, 2, 2}, {2, 2, 2, 2, 2}, {2, 2, 2, 2, 2}};
  auto got = leading_coefficient_table(5, 5);
  for (int r = 1; r <= 5; ++r)
    for (int n = 1; n <= 5; ++n) {
      const Integer& g = got[r - 1][n - 1];
      const Integer& w = want[r - 1][n - 1];
      rep.add("r=" + std::to_string(r) + " n=" + std::to_string(n), g == w, g.get_str() + " vs " + w.get_str());
    }
  return rep;
}

inline CheckReport oracle_nonorient(const SuiteOptions& o) {
  CheckReport rep{"oracle case A", {}};
  struct Case {
    int n, q, rmax;
  };
  std::vector<Case> cases{{1, 3, 3}, {1, 5, 3}, {2, 3, 3}, {2, 5, 3}, {2, 7, 2}, {3, 3, 2}};
  if (!o.quick) {
    cases.push_back({1, 7, 3});
    cases.push_back({1, 9, 3});
    cases.push_back({2, 9, 2});
  }
  for (const auto& c : cases)
    for (int r = 1; r <= c.rmax; ++r) {
      OracleComparison cmp = nonorient_oracle(c.n, c.q, r);
      rep.add("n=" + std::to_string(c.n) + " r=" + std::to_string(r) + " q=" + std::to_string(c.q), cmp.equal(),
              count_detail(cmp));
    }
  return rep;
}

inline CheckReport orbits(const SuiteOptions& o) {
  CheckReport rep{"gamma orbits", {}};
  std::vector<std::pair<int, int>> cases{{3, 4}, {5, 4}, {7, 4}, {9, 4}};
  if (!o.quick) {
    cases.push_back({3, 6});
    cases.push_back({5, 5});
  }
  for (auto [q, dmax] : cases)
    for (auto r : gamma_orbit_check(q, dmax).results) {
      r.name = "q=" + std::to_string(q) + " d<=" + std::to_string(dmax) + " " + r.name;
      rep.results.push_back(r);
    }
  rep.merge(maintheo_suite(o.seed, 20, 6));
  return rep;
}

inline CheckReport closed_forms(const SuiteOptions&) {
  CheckReport rep{"punctured closed forms", {}};
  rep.merge(conjecture_checks("lemma_rk1", 2));
  RationalFunction x = qt2(), one(1);
  RationalFunction t = RationalFunction::variable("t"), q = RationalFunction::variable("q");
  expect_equal(rep, "mixed (1)", mixed_poincare(1, 1, parse_partition_tuple("1")), (t + x) / (x - one));
  expect_equal(rep, "mixed (2)", mixed_poincare(1, 1, parse_partition_tuple("2")),
               one / (x * (x - one) * (x + one)));
  expect_equal(rep, "mixed (1,1)", mixed_poincare(1, 1, parse_partition_tuple("1,1")), one / (x - one));
  expect_equal(rep, "e_count (1)", e_count_punctured(1, 1, parse_partition_tuple("1")), one);
  expect_equal(rep, "e_count (2)", e_count_punctured(1, 1, parse_partition_tuple("2")),
               one / (q * (q - one) * (q + one)));
  expect_equal(rep, "e_count (1,1)", e_count_punctured(1, 1, parse_partition_tuple("1,1")), one / (q - one));

  for (int r = 1; r <= 2; ++r)
    for (int k = 1; k <= 2; ++k)
      for (int n = 1; n <= 3; ++n) {
        std::vector<PartitionTuple> tuples{{}};
        for (int i = 0; i < k; ++i) {
          std::vector<PartitionTuple> next;
          for (const auto& prefix : tuples)
            for (const auto& lam : partitions_of(n)) {
              auto mu = prefix;
              mu.push_back(lam);
              next.push_back(mu);
            }
          tuples = std::move(next);
        }
        for (const auto& mu : tuples) {
          RationalFunction at = mixed_poincare(r, k, mu).evaluate_at("t", -1);
          expect_equal(rep, "t=-1 r=" + std::to_string(r) + " k=" + std::to_string(k) + " " + to_string(mu), at,
                       e_count_punctured(r, k, mu));
        }
      }
  return rep;
}

inline CheckReport oracle_punctured(const SuiteOptions& o) {
  CheckReport rep{"oracle case B", {}};
  auto run = [&](int r, int q, const std::vector<std::vector<int>>& eig) {
    FieldClassSpec spec = class_spec_from_eigenvalues(eig);
    OracleComparison c = punctured_oracle(r, q, spec);
    FiniteField F(q);
    std::string name = "r=" + std::to_string(r) + " q=" + std::to_string(q) + " eigenvalues";
    for (int e : eig[0]) name += " " + F.to_string(e);
    rep.add(name, c.equal(), count_detail(c));
  };
  std::vector<int> line{3, 5, 7}, plane{5, 7};
  if (!o.quick) {
    line.push_back(9);
    plane.push_back(9);
  }
  for (int r = 1; r <= 2; ++r) {
    for (int q : line) run(r, q, {{1}});
    for (int q : plane) {
      FiniteField F(q);
      int minus_one = F.neg(1);
      run(r, q, {{minus_one, minus_one}});
      for (int xi = 2; xi < q; ++xi)
        if (xi != minus_one && xi < F.inv(xi)) run(r, q, {{xi, F.inv(xi)}});
    }
  }
  return rep;
}

inline CheckReport conjecture(const SuiteOptions&) {
  CheckReport rep{"conjecture at desk scale", {}};
  for (auto r : conjecture_checks("conj_0conj", 4).results) {
    r.notable = true;
    rep.results.push_back(r);
  }
  rep.merge(conjecture_checks("euler_spec", 6));
  rep.merge(conjecture_checks("sign_symmetry", 6));
  return rep;
}

inline CheckReport denominators(const SuiteOptions&) { return conjecture_checks("denominators", 4); }

}  // namespace suite

inline const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all{
      {1, "involution table", 1, suite::involutions},
      {2, "q-series identities", 10, suite::identities},
      {3, "counting pipeline", 30, suite::pipeline},
      {4, "integrality", 60, suite::integrality},
      {5, "leading coefficients", 60, suite::leading_coefficients},
      {6, "oracle case A", 300, suite::oracle_nonorient},
      {7, "gamma orbits", 60, suite::orbits},
      {8, "punctured closed forms", 60, suite::closed_forms},
      {9, "oracle case B", 60, suite::oracle_punctured},
      {10, "conjecture at desk scale", 120, suite::conjecture},
      {11, "denominators", 60, suite::denominators},
  };
  return all;
}

}  // namespace ncv
