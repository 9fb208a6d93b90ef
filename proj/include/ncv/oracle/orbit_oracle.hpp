#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncv/algebra/rational.hpp"
#include "ncv/check.hpp"
#include "ncv/nonorient/orbits.hpp"
#include "ncv/oracle/finite_field.hpp"
#include "ncv/parallel.hpp"

namespace ncv {

/// Integer orbit counts by Gamma-degree, indexed from 1 like OrbitCounts.
struct OrbitTally {
  std::vector<Rational> fixed, twisted, sharp, inf;

  explicit OrbitTally(int bound = 0)
      : fixed(bound + 1, 0), twisted(bound + 1, 0), sharp(bound + 1, 0), inf(bound + 1, 0) {}
  int bound() const { return static_cast<int>(fixed.size()) - 1; }
};

namespace detail {

inline std::string tally_row(const char* name, int d, const Rational& a, const Rational& b) {
  return std::string(name) + "[" + std::to_string(d) + "]: " + ncv::to_string(a) + " vs " + ncv::to_string(b);
}

inline void compare_tallies(CheckReport& rep, const OrbitTally& direct, const OrbitTally& formula) {
  int bound = std::min(direct.bound(), formula.bound());
  for (int d = 1; d <= bound; ++d) {
    auto row = [&](const char* name, const std::vector<Rational>& a, const std::vector<Rational>& b) {
      rep.add(std::string(name) + "[" + std::to_string(d) + "]", a[d] == b[d], tally_row(name, d, a[d], b[d]));
    };
    row("(0,d)", direct.fixed, formula.fixed);
    row("(r,2r)", direct.twisted, formula.twisted);
    row("#d", direct.sharp, formula.sharp);
    row("(inf,d)", direct.inf, formula.inf);
  }
}

}  // namespace detail

/// Orbits of <F, sigma> on a finite set given by permutation tables, counted
/// directly and through the Moebius formulas applied to fixed-point counts.
inline CheckReport orbit_prop_oracle(const std::vector<int>& F, const std::vector<int>& sigma) {
  CheckReport rep{"orbit_prop", {}};
  int size = static_cast<int>(F.size());
  if (sigma.size() != F.size()) throw RangeError("F and sigma tables differ in size");
  if (size > 100000) throw BudgetExceeded("set of size " + std::to_string(size));
  std::vector<int> degree(size), twist(size, -1);
  int dmax = 1;
  for (int x = 0; x < size; ++x) {
    int d = 0, y = x;
    do {
      if (y == sigma[x] && twist[x] < 0) twist[x] = d;
      y = F[y];
      ++d;
    } while (y != x);
    degree[x] = d;
    dmax = std::max(dmax, d);
  }
  for (int x = 0; x < size; ++x)
    if (sigma[F[x]] != F[sigma[x]] || sigma[sigma[x]] != x) throw RangeError("F and sigma must commute and sigma must be an involution");

  OrbitTally direct(dmax), formula(dmax);
  for (int x = 0; x < size; ++x) {
    int d = degree[x];
    if (twist[x] == 0) {
      direct.fixed[d] += make_rational(1, d);
    } else {
      direct.sharp[d] += make_rational(1, d);
      if (twist[x] > 0)
        direct.twisted[twist[x]] += make_rational(1, 2 * twist[x]);
      else
        direct.inf[d] += make_rational(1, 2 * d);
    }
  }

  // N_e, N'_s, N#_e by direct point counts.
  std::vector<Rational> N(dmax + 1, 0), Ntw(dmax + 1, 0), Nsh(dmax + 1, 0);
  for (int x = 0; x < size; ++x) {
    bool fixed = sigma[x] == x;
    int y = x;
    for (int e = 1; e <= dmax; ++e) {
      y = F[y];
      if (y == x) (fixed ? N : Nsh)[e] += 1;
      if (!fixed && y == sigma[x]) Ntw[e] += 1;
    }
  }
  for (int d = 1; d <= dmax; ++d)
    for (int e : divisors(d)) {
      int mu = moebius(d / e);
      formula.fixed[d] += make_rational(mu, d) * N[e];
      formula.sharp[d] += make_rational(mu, d) * Nsh[e];
      if ((d / e) % 2) formula.twisted[d] += make_rational(mu, 2 * d) * Ntw[e];
    }
  for (int d = 1; d <= dmax; ++d) {
    formula.inf[d] = formula.sharp[d] / 2;
    if (d % 2 == 0) formula.inf[d] -= formula.twisted[d / 2] / 2;
  }
  detail::compare_tallies(rep, direct, formula);
  return rep;
}

inline constexpr std::int64_t kOrbitBudget = 100'000'000;

/// Gamma-orbits on G_m(F_q-bar) of index at most dmax, counted by enumeration.
/// F_{q^m}^x is cyclic of order q^m - 1; through a discrete logarithm the
/// Frobenius acts as multiplication by q and sigma as negation.
inline OrbitTally gamma_orbit_oracle(int q, int dmax) {
  FiniteField base(q);
  if (dmax < 1) throw RangeError("dmax must be positive");
  std::int64_t total = 0, qm = 1;
  for (int m = 1; m <= 2 * dmax; ++m) {
    if (qm > kOrbitBudget / q) throw BudgetExceeded("q^" + std::to_string(m) + " exceeds the orbit budget");
    qm *= q;
    total += qm;
  }
  if (total > kOrbitBudget) throw BudgetExceeded("orbit enumeration of " + std::to_string(total) + " elements");

  // Unit fractions are tallied as integer counts per denominator, then scaled.
  struct Counts {
    std::vector<std::int64_t> fixed, twisted, sharp, inf;
  };
  int workers = thread_count();
  std::vector<Counts> parts(workers, Counts{std::vector<std::int64_t>(dmax + 1, 0), std::vector<std::int64_t>(dmax + 1, 0),
                                            std::vector<std::int64_t>(dmax + 1, 0), std::vector<std::int64_t>(dmax + 1, 0)});
  qm = 1;
  for (int m = 1; m <= 2 * dmax; ++m) {
    qm *= q;
    bool low = m <= dmax;
    if (!low && m % 2) continue;
    const std::int64_t M = qm - 1;
    parallel_for(
        M,
        [&](long begin, long end, int w) {
          Counts& c = parts[w];
          for (std::int64_t a = begin; a < end; ++a) {
            // Degree of a is the least j with q^j a = a (mod M); the twist index
            // is the least r with q^r a = -a.
            std::int64_t y = a, neg = (M - a) % M;
            int d = 0, r = -1;
            do {
              if (r < 0 && y == neg) r = d;
              y = y * q % M;
              ++d;
            } while (y != a && d <= m);
            if (d != m) continue;
            if (r == 0) {
              if (low) ++c.fixed[m];
            } else {
              if (low) ++c.sharp[m];
              if (r > 0)
                ++c.twisted[r];
              else if (low)
                ++c.inf[m];
            }
          }
        },
        workers);
  }
  OrbitTally t(dmax);
  for (const auto& c : parts)
    for (int d = 1; d <= dmax; ++d) {
      t.fixed[d] += make_rational(c.fixed[d], d);
      t.sharp[d] += make_rational(c.sharp[d], d);
      t.twisted[d] += make_rational(c.twisted[d], 2 * d);
      t.inf[d] += make_rational(c.inf[d], 2 * d);
    }
  return t;
}

/// Compares gamma_orbit_oracle with the polynomial orbit counts at q.
inline CheckReport gamma_orbit_check(int q, int dmax) {
  CheckReport rep{"gamma_orbits q=" + std::to_string(q), {}};
  OrbitTally direct = gamma_orbit_oracle(q, dmax);
  OrbitCounts c = gamma_counts_gm(dmax);
  OrbitTally formula(dmax);
  auto at = [&](const RationalFunction& f) { return f.evaluate_at("q", q).constant_value(); };
  for (int d = 1; d <= dmax; ++d) {
    formula.fixed[d] = at(c.fixed[d]);
    formula.twisted[d] = at(c.twisted[d]);
    formula.sharp[d] = at(c.sharp[d]);
    formula.inf[d] = at(c.inf[d]);
  }
  detail::compare_tallies(rep, direct, formula);
  return rep;
}

}  // namespace ncv
