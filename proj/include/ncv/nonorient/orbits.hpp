#pragma once

#include <vector>

#include "ncv/algebra/laurent_poly.hpp"
#include "ncv/algebra/rational.hpp"
#include "ncv/algebra/rational_function.hpp"
#include "ncv/nonorient/qseries.hpp"

namespace ncv {

/// Counting polynomials of a variety with commuting Frobenius F and involution
/// sigma: F-stable points fixed by sigma (n1), points with F(x) = sigma(x)
/// (n1_twisted), F-stable points not fixed by sigma (n1_sharp).
struct GammaDatum {
  LaurentPoly n1, n1_twisted, n1_sharp;
};

inline GammaDatum gm_datum() { return {LaurentPoly(2), qvar() - 1, qvar() - 3}; }

/// Orbit counts indexed from 1; entry 0 is unused.
struct OrbitCounts {
  std::vector<RationalFunction> fixed;    // N~_(0,d)
  std::vector<RationalFunction> twisted;  // N~_(r,2r), indexed by r
  std::vector<RationalFunction> sharp;    // N~^#_d
  std::vector<RationalFunction> inf;      // N~_(inf,d)
  int bound = 0;
};

inline OrbitCounts orbit_counts(const GammaDatum& g, int bound) {
  if (bound < 1) throw RangeError("orbit bound must be positive");
  OrbitCounts c;
  c.bound = bound;
  c.fixed.resize(bound + 1);
  c.twisted.resize(bound + 1);
  c.sharp.resize(bound + 1);
  c.inf.resize(bound + 1);
  for (int d = 1; d <= bound; ++d) {
    LaurentPoly f, s, t;
    for (int e : divisors(d)) {
      int mu = moebius(d / e);
      if (mu == 0) continue;
      f += g.n1.adams(e).scaled(mu);
      s += g.n1_sharp.adams(e).scaled(mu);
      if ((d / e) % 2) t += g.n1_twisted.adams(e).scaled(mu);
    }
    c.fixed[d] = RationalFunction(f.scaled(make_rational(1, d)));
    c.sharp[d] = RationalFunction(s.scaled(make_rational(1, d)));
    c.twisted[d] = RationalFunction(t.scaled(make_rational(1, 2 * d)));
  }
  for (int d = 1; d <= bound; ++d) {
    c.inf[d] = c.sharp[d].scaled(make_rational(1, 2));
    if (d % 2 == 0) c.inf[d] -= c.twisted[d / 2].scaled(make_rational(1, 2));
  }
  return c;
}

inline OrbitCounts gamma_counts_gm(int bound) { return orbit_counts(gm_datum(), bound); }

}  // namespace ncv
