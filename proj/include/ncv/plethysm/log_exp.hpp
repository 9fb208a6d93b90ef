#pragma once

#include "ncv/algebra/series.hpp"
#include "ncv/plethysm/adams.hpp"

namespace ncv {

/// Plethystic logarithm: Log f = sum_d mu(d)/d * psi_d(log f).
template <class C, class Action = PowerAdams>
TruncatedSeries<C> pleth_log(const TruncatedSeries<C>& f, const Action& act = {}) {
  using Ops = CoeffOps<C>;
  TruncatedSeries<C> l = f.log();
  TruncatedSeries<C> r(f.cutoff(), f.zero_proto());
  for (int n = 1; n <= f.cutoff(); ++n) {
    C acc = Ops::zero_like(f.zero_proto());
    for (int d : divisors(n)) {
      int mu = moebius(d);
      if (mu == 0 || Ops::is_zero(l[n / d])) continue;
      acc = acc + Ops::scale(act(l[n / d], d), make_rational(mu, d));
    }
    r.set(n, std::move(acc));
  }
  return r;
}

/// Plethystic exponential: Exp g = exp(sum_n psi_n(g)/n).
template <class C, class Action = PowerAdams>
TruncatedSeries<C> pleth_exp(const TruncatedSeries<C>& g, const Action& act = {}) {
  using Ops = CoeffOps<C>;
  if (!Ops::is_zero(g[0])) throw ExpOfNonzeroConstant("constant term " + Ops::render(g[0]));
  TruncatedSeries<C> s(g.cutoff(), g.zero_proto());
  for (int m = 1; m <= g.cutoff(); ++m) {
    C acc = Ops::zero_like(g.zero_proto());
    for (int n : divisors(m)) {
      if (Ops::is_zero(g[m / n])) continue;
      acc = acc + Ops::scale(act(g[m / n], n), make_rational(1, n));
    }
    s.set(m, std::move(acc));
  }
  return s.exp();
}

}  // namespace ncv
