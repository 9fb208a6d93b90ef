#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncv/algebra/rational.hpp"
#include "ncv/algebra/series.hpp"

namespace ncv {

/// psi_n on a coefficient ring: each listed variable (all of them when the
/// list is empty) is raised to the n-th power. Symmetric functions also send
/// p_k to p_{nk}, which they implement through their own `adams` member.
struct PowerAdams {
  std::vector<std::string> only;

  PowerAdams() = default;
  explicit PowerAdams(std::vector<std::string> vars) : only(std::move(vars)) {}

  Rational operator()(const Rational& c, int) const { return c; }

  template <class C>
  C operator()(const C& c, int n) const {
    if (n == 1) return c;
    if constexpr (requires { c.adams(n, *this); })
      return c.adams(n, *this);
    else if (only.empty())
      return c.adams(n);
    else
      return c.adams(n, only);
  }
};

/// psi_n on a series: coefficients by the action, degree d to degree n*d.
template <class C, class Action = PowerAdams>
TruncatedSeries<C> adams(const TruncatedSeries<C>& f, int n, const Action& act = {}) {
  if (n < 1) throw RangeError("adams index must be positive");
  TruncatedSeries<C> r(f.cutoff(), f.zero_proto());
  for (int d = 0; d * n <= f.cutoff(); ++d)
    if (!CoeffOps<C>::is_zero(f[d])) r.set(d * n, act(f[d], n));
  return r;
}

}  // namespace ncv
