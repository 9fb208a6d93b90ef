#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "ncv/algebra/rational_function.hpp"
#include "ncv/algebra/series.hpp"
#include "ncv/nonorient/qseries.hpp"
#include "ncv/plethysm/log_exp.hpp"
#include "ncv/sym/hooks.hpp"
#include "ncv/sym/partition.hpp"

namespace ncv {

/// Z_rho(q,T) = sum_lambda (q^{-n(lambda)} H_lambda(q))^rho T^{|lambda|}.
inline RFSeries z_series(int rho, int N) {
  RFSeries z(N);
  for (int n = 0; n <= N; ++n) {
    RationalFunction c;
    for (const auto& lam : partitions_of(n)) {
      RationalFunction base(qvar(-lam.n()) * hook_polynomial(lam));
      c += base.pow(rho);
    }
    z.set(n, std::move(c));
  }
  return z;
}

namespace detail {

template <class Compute>
const RFSeries& memo_series(std::map<int, RFSeries>& memo, std::mutex& mu, int rho, int N,
                            Compute&& compute) {
  std::lock_guard lock(mu);
  auto it = memo.find(rho);
  if (it == memo.end() || it->second.cutoff() < N) it = memo.insert_or_assign(rho, compute(rho, N)).first;
  return it->second;
}

}  // namespace detail

/// Log Z_rho to at least degree N (memoized).
inline const RFSeries& log_z(int rho, int N) {
  static std::mutex mu;
  static std::map<int, RFSeries> memo;
  return detail::memo_series(memo, mu, rho, N, [](int r, int n) { return pleth_log(z_series(r, n)); });
}

inline RationalFunction v_coeff(int rho, int n) {
  if (n < 1) throw RangeError("V index must be positive");
  return log_z(rho, n)[n];
}

/// V_{rho,n,k} = sum over m | n with m | k^infinity of (1/m) V_{rho,n/m}(q^m).
inline RationalFunction v_coeff_k(int rho, int n, int k) {
  if (n < 1 || k < 1) throw RangeError("V index must be positive");
  RationalFunction s;
  for (int m : divisors(n)) {
    int rest = m;
    for (int g = std::gcd(rest, k); g > 1; g = std::gcd(rest, k)) rest /= g;
    if (rest != 1) continue;
    s += v_coeff(rho, n / m).adams(m).scaled(make_rational(1, m));
  }
  return s;
}

inline RationalFunction w_coeff(int rho, int n) {
  if (n < 1) throw RangeError("W index must be positive");
  RationalFunction w = v_coeff(rho, n).scaled(2);
  if (n % 2 == 0) {
    int h = n / 2;
    RationalFunction q(qvar());
    w += (q - 2) * v_coeff(2 * rho, h);
    w += (q - 1).scaled(make_rational(1, 2)) * (v_coeff_k(rho, h, 2).adams(2) - v_coeff_k(2 * rho, h, 2));
  }
  return w;
}

/// M_rho(q,T) = Exp(sum_n W_{rho,n} T^n), memoized.
inline const RFSeries& m_series(int rho, int N) {
  static std::mutex mu;
  static std::map<int, RFSeries> memo;
  return detail::memo_series(memo, mu, rho, N, [](int r, int cutoff) {
    RFSeries g(cutoff);
    for (int n = 1; n <= cutoff; ++n) g.set(n, w_coeff(r, n));
    return pleth_exp(g);
  });
}

inline RationalFunction mcoeff(int rho, int n) {
  if (n < 0) throw RangeError("negative n");
  return m_series(rho, n)[n];
}

/// E-polynomial of the nonorientable character stack: q^{rho C(n,2)} Coeff_{T^n} M_rho.
inline RationalFunction e_count_nonorient(int rho, int n) {
  RationalFunction e = RationalFunction(qvar(rho * static_cast<int>(binomial2(n)))) * mcoeff(rho, n);
  if (rho >= 0 && (!e.is_polynomial() || !e.num().has_integer_coefficients()))
    throw IntegralityViolation("rho=" + std::to_string(rho) + ", n=" + std::to_string(n) + ": " + e.to_string());
  return e;
}

/// Leading coefficients of e_count * |GL_n| for r = rho + 2 in 1..rmax, n in 1..nmax.
inline std::vector<std::vector<Integer>> leading_coefficient_table(int rmax, int nmax) {
  std::vector<std::vector<Integer>> table;
  for (int r = 1; r <= rmax; ++r) {
    std::vector<Integer> row;
    for (int n = 1; n <= nmax; ++n) {
      LaurentPoly p = (e_count_nonorient(r - 2, n) * RationalFunction(gl_order(n))).as_polynomial();
      Rational lc = p.coefficient("q", p.degree("q")).constant_value();
      row.push_back(lc.get_num());
    }
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace ncv
