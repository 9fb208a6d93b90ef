#pragma once

#include "ncv/algebra/laurent_poly.hpp"
#include "ncv/algebra/rational_function.hpp"
#include "ncv/algebra/series.hpp"

namespace ncv {

using RFSeries = TruncatedSeries<RationalFunction>;

inline LaurentPoly qvar(int e = 1) { return LaurentPoly::variable("q", e); }

/// (q)_n = prod_{k=1}^n (1 - q^k).
inline LaurentPoly q_pochhammer(int n) {
  LaurentPoly r(1);
  for (int k = 1; k <= n; ++k) r *= 1 - qvar(k);
  return r;
}

inline LaurentPoly q_binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n)
    throw RangeError("q_binomial(" + std::to_string(n) + ", " + std::to_string(r) + ")");
  return q_pochhammer(n).exact_div(q_pochhammer(r) * q_pochhammer(n - r));
}

/// Number of involutions of GL_n(F_q): sum_r q^{r(n-r)} [n choose r].
inline LaurentPoly involution_count(int n) {
  if (n < 0) throw RangeError("negative n");
  LaurentPoly s;
  for (int r = 0; r <= n; ++r) s += qvar(r * (n - r)) * q_binomial(n, r);
  return s;
}

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
inline LaurentPoly gl_order(int n) {
  LaurentPoly r(1);
  for (int i = 0; i < n; ++i) r *= qvar(n) - qvar(i);
  return r;
}

/// I(q,T) = sum I_n(q)/(q)_n T^n.
inline RFSeries i_series(int N) {
  RFSeries s(N);
  for (int n = 0; n <= N; ++n) s.set(n, RationalFunction(involution_count(n), q_pochhammer(n)));
  return s;
}

/// I*(q,X,Y) graded by total degree in X, Y.
inline RFSeries i_star_series(int N) {
  RFSeries s(N);
  for (int d = 0; d <= N; ++d) {
    RationalFunction c;
    for (int r = 0; r <= d; ++r) {
      int t = d - r;
      LaurentPoly mono = LaurentPoly::monomial(1, {{"q", r * t}, {"X", r}, {"Y", t}});
      c += RationalFunction(mono, q_pochhammer(r) * q_pochhammer(t));
    }
    s.set(d, c);
  }
  return s;
}

/// Euler's series sum_n (sign)^n q^{e*C(n,2)} (var)^n / (q)_n, graded by n*weight.
inline RFSeries euler_series(const LaurentPoly& var, int weight, int sign, int qshift, int N) {
  RFSeries s(N);
  for (int n = 0; n * weight <= N; ++n) {
    LaurentPoly num = var.pow(static_cast<unsigned>(n)) * qvar(qshift * static_cast<int>(binomial2(n)));
    if (sign < 0 && n % 2) num = -num;
    s.set(n * weight, RationalFunction(num, q_pochhammer(n)));
  }
  return s;
}

}  // namespace ncv
