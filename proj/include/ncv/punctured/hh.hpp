#pragma once

#include <string>

#include "ncv/algebra/rational_function.hpp"
#include "ncv/algebra/substitute.hpp"
#include "ncv/punctured/cauchy.hpp"
#include "ncv/sym/partition.hpp"

namespace ncv {

namespace detail {

inline int common_size(int k, const PartitionTuple& mu) {
  if (k < 1 || static_cast<int>(mu.size()) != k)
    throw RangeError("mu = " + to_string(mu) + " must have k = " + std::to_string(k) + " components");
  int n = mu[0].size();
  for (const auto& p : mu)
    if (p.size() != n) throw RangeError("components of " + to_string(mu) + " have different sizes");
  if (n < 1) throw RangeError("mu must be a tuple of partitions of n >= 1");
  return n;
}

inline LaurentPoly zw(const char* v, int e = 1) { return LaurentPoly::variable(v, e); }

}  // namespace detail

/// HH_mu(z,w) = (z^2-1)(1-w^2) <Log Omega_{r,k}, h_mu>.
inline RationalFunction hh_mu(int r, int k, const PartitionTuple& mu) {
  int n = detail::common_size(k, mu);
  const SymSeries& log = log_omega(r, k, n);
  RationalFunction pairing = hall_with_h(log[n], mu);
  return pairing * RationalFunction((detail::zw("z", 2) - 1) * (1 - detail::zw("w", 2)));
}

/// d_mu = n^2 (r - 2 + k) + 2 - sum (mu^i_j)^2.
inline long d_mu(int r, int k, const PartitionTuple& mu) {
  int n = detail::common_size(k, mu);
  long d = static_cast<long>(n) * n * (r - 2 + k) + 2;
  for (const auto& p : mu)
    for (int part : p.parts()) d -= static_cast<long>(part) * part;
  return d;
}

/// q^{d_mu/2} HH_mu(sqrt q, 1/sqrt q) / (q - 1), with q = u^2.
inline RationalFunction e_count_punctured(int r, int k, const PartitionTuple& mu) {
  LaurentPoly u = detail::zw("u");
  RationalFunction h = substitute(hh_mu(r, k, mu), {{"z", u}, {"w", detail::zw("u", -1)}});
  RationalFunction e = h * RationalFunction(detail::zw("u", static_cast<int>(d_mu(r, k, mu))), u.pow(2) - 1);
  return halve_exponents(e, "u", "q");
}

/// (t sqrt q)^{d_mu} HH_mu(t sqrt q, -1/sqrt q) / (q t^2 - 1), with q = u^2.
inline RationalFunction mixed_poincare(int r, int k, const PartitionTuple& mu) {
  LaurentPoly u = detail::zw("u"), t = detail::zw("t");
  RationalFunction h = substitute(hh_mu(r, k, mu), {{"z", t * u}, {"w", -detail::zw("u", -1)}});
  int d = static_cast<int>(d_mu(r, k, mu));
  RationalFunction e = h * RationalFunction(LaurentPoly::monomial(1, {{"t", d}, {"u", d}}),
                                            (t * u).pow(2) - 1);
  return halve_exponents(e, "u", "q");
}

}  // namespace ncv
