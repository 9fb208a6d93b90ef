#pragma once

#include <random>
#include <string>

#include "ncv/check.hpp"
#include "ncv/nonorient/orbits.hpp"
#include "ncv/nonorient/qseries.hpp"
#include "ncv/nonorient/zseries.hpp"
#include "ncv/plethysm/adams.hpp"
#include "ncv/plethysm/log_exp.hpp"

namespace ncv {

struct TripleProduct {
  RFSeries f0, f1, finf;
  RFSeries product() const { return f0 * f1 * finf; }
};

/// F_0 = prod_d psi_d(O0)^{N~_(0,d)}, F_1 = prod_r psi_{2r}(O1)^{N~_(r,2r)},
/// F_inf = prod_d psi_d(Oinf)(T^2)^{N~_(inf,d)}, powers taken as exp(c log A).
inline TripleProduct triple_product(const GammaDatum& g, const RFSeries& o0, const RFSeries& o1,
                                    const RFSeries& oinf, int N) {
  OrbitCounts c = orbit_counts(g, N);
  TripleProduct t{RFSeries::one(N), RFSeries::one(N), RFSeries::one(N)};
  for (int d = 1; d <= N; ++d)
    if (!c.fixed[d].is_zero()) t.f0 *= adams(o0.truncated(N), d).pow(c.fixed[d]);
  for (int r = 1; 2 * r <= N; ++r)
    if (!c.twisted[r].is_zero()) t.f1 *= adams(o1.truncated(N), 2 * r).pow(c.twisted[r]);
  for (int d = 1; 2 * d <= N; ++d)
    if (!c.inf[d].is_zero()) t.finf *= adams(oinf.truncated(N), d).stretch(2).pow(c.inf[d]);
  return t;
}

inline RFSeries product_formula_m(int rho, int N) {
  RFSeries z = z_series(rho, N);
  return triple_product(gm_datum(), z, z, z_series(2 * rho, N), N).product();
}

namespace detail {

inline std::string series_mismatch(const RFSeries& lhs, const RFSeries& rhs) {
  int d = lhs.first_difference(rhs);
  if (d < 0) return {};
  return "T^" + std::to_string(d) + ": " + lhs[d].to_string() + " vs " + rhs[d].to_string();
}

}  // namespace detail

/// Compares Log F_0, Log F_1, Log F_inf with their closed forms.
inline CheckReport maintheo_check(const GammaDatum& g, const RFSeries& o0, const RFSeries& o1,
                                  const RFSeries& oinf, int N) {
  CheckReport rep{"maintheo", {}};
  TripleProduct t = triple_product(g, o0, o1, oinf, N);
  RFSeries h1 = pleth_log(o1.truncated(N)), hinf = pleth_log(oinf.truncated(N));
  RationalFunction n1p(g.n1_twisted), n1s(g.n1_sharp);

  RFSeries i = pleth_log(o0.truncated(N)).times(RationalFunction(g.n1));
  RFSeries ii(N), iii(N);
  for (int m = 1; 2 * m <= N; ++m) {
    RationalFunction a, b;
    int v = valuation2(m);
    for (int j = 0; j <= v; ++j) {
      int sub = m >> j;
      a += h1[sub].adams(1 << (j + 1)).scaled(make_rational(1, 1 << j));
      if (j >= 1) b += hinf[sub].adams(1 << j).scaled(make_rational(1, 1 << j));
    }
    ii.set(2 * m, (n1p * a).scaled(make_rational(1, 2)));
    iii.set(2 * m, (n1s * hinf[m] - n1p * b).scaled(make_rational(1, 2)));
  }

  auto compare = [&](const std::string& name, const RFSeries& lhs, const RFSeries& rhs) {
    std::string why = detail::series_mismatch(lhs, rhs);
    rep.add(name, why.empty(), why);
  };
  compare("Log F0", pleth_log(t.f0), i);
  compare("Log F1", pleth_log(t.f1), ii);
  compare("Log Finf", pleth_log(t.finf), iii);
  return rep;
}

/// Random datum and series with small integer coefficients in q, for
/// exercising maintheo_check away from the multiplicative group.
inline LaurentPoly random_q_poly(std::mt19937& rng, int bound = 4) {
  std::uniform_int_distribution<int> coef(-bound, bound), deg(0, 2);
  LaurentPoly c;
  for (int k = 0; k < 3; ++k) c += LaurentPoly::variable("q", deg(rng)).scaled(coef(rng));
  return c;
}

inline GammaDatum random_gamma_datum(std::mt19937& rng) {
  GammaDatum g;
  g.n1 = random_q_poly(rng);
  g.n1_twisted = random_q_poly(rng);
  g.n1_sharp = random_q_poly(rng);
  return g;
}

inline RFSeries random_unit_series(std::mt19937& rng, int N) {
  RFSeries s = RFSeries::one(N);
  for (int d = 1; d <= N; ++d) s.set(d, RationalFunction(random_q_poly(rng, 3)));
  return s;
}

/// maintheo_check on the G_m datum followed by `trials` random data.
inline CheckReport maintheo_suite(unsigned seed, int trials, int N) {
  CheckReport rep{"maintheo", {}};
  RFSeries z1 = z_series(1, N), z2 = z_series(2, N);
  for (auto r : maintheo_check(gm_datum(), z1, z1, z2, N).results) {
    r.name = "G_m " + r.name;
    rep.results.push_back(r);
  }
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    GammaDatum g = random_gamma_datum(rng);
    RFSeries o0 = random_unit_series(rng, N), o1 = random_unit_series(rng, N), oi = random_unit_series(rng, N);
    for (auto r : maintheo_check(g, o0, o1, oi, N).results) {
      r.name = "trial " + std::to_string(t) + " " + r.name;
      rep.results.push_back(r);
    }
  }
  return rep;
}

}  // namespace ncv
