#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncv/algebra/substitute.hpp"
#include "ncv/check.hpp"
#include "ncv/nonorient/maintheo.hpp"
#include "ncv/nonorient/qseries.hpp"
#include "ncv/nonorient/zseries.hpp"
#include "ncv/plethysm/log_exp.hpp"

namespace ncv {

namespace detail {

inline void compare_series(CheckReport& rep, const std::string& name, const RFSeries& lhs,
                           const RFSeries& rhs) {
  std::string why = series_mismatch(lhs, rhs);
  rep.add(name, why.empty(), why);
}

inline RFSeries series_of(int N, std::map<int, RationalFunction> coeffs) {
  RFSeries s(N);
  for (auto& [d, c] : coeffs) s.set(d, std::move(c));
  return s;
}

inline CheckReport verify_i_log(int N) {
  CheckReport rep{"i_log", {}};
  RationalFunction q(qvar());
  compare_series(rep, "(q-1) Log I = -2T + T^2", pleth_log(i_series(N)).times(q - 1),
                 series_of(N, {{1, -2}, {2, 1}}));
  compare_series(rep, "I(q,T) = I*(q,T,T)", i_series(N),
                 i_star_series(N).map([](const RationalFunction& c) {
                   return substitute(c, {{"X", LaurentPoly(1)}, {"Y", LaurentPoly(1)}});
                 }));
  return rep;
}

inline CheckReport verify_i_star_log(int N) {
  CheckReport rep{"i_star_log", {}};
  LaurentPoly X = LaurentPoly::variable("X"), Y = LaurentPoly::variable("Y");
  compare_series(rep, "(q-1) Log I* = -X - Y + XY",
                 pleth_log(i_star_series(N)).times(RationalFunction(qvar() - 1)),
                 series_of(N, {{1, RationalFunction(-X - Y)}, {2, RationalFunction(X * Y)}}));
  return rep;
}

inline CheckReport verify_i_star_product(int N) {
  CheckReport rep{"i_star_product", {}};
  LaurentPoly X = LaurentPoly::variable("X"), Y = LaurentPoly::variable("Y");
  // prod_n (1 - q^n X)^{-1} and prod_n (1 - q^n XY) by Euler's two identities.
  RFSeries rhs = euler_series(X, 1, 1, 0, N) * euler_series(Y, 1, 1, 0, N) * euler_series(X * Y, 2, -1, 1, N);
  compare_series(rep, "I* = prod (1 - q^n XY) / ((1 - q^n X)(1 - q^n Y))", i_star_series(N), rhs);
  return rep;
}

inline CheckReport verify_z_minus1(int N) {
  CheckReport rep{"z_minus1", {}};
  LaurentPoly q = qvar();
  compare_series(rep, "Log Z_-1 = T/(q-1) + T^2/((q^2-1)(q-1))", pleth_log(z_series(-1, N)),
                 series_of(N, {{1, RationalFunction(1, q - 1)},
                               {2, RationalFunction(1, (q.pow(2) - 1) * (q - 1))}}));
  return rep;
}

inline CheckReport verify_m_minus1(int N) {
  CheckReport rep{"m_minus1", {}};
  LaurentPoly q = qvar();
  const RFSeries& m = m_series(-1, N);
  compare_series(rep, "M_-1(q,T) = I(q,-T)", m, i_series(N).sign_flip());
  compare_series(rep, "Log M_-1 = 2T/(q-1) + T^2/(q+1)", pleth_log(m.truncated(N)),
                 series_of(N, {{1, RationalFunction(2, q - 1)}, {2, RationalFunction(1, q + 1)}}));
  return rep;
}

inline CheckReport verify_m0_product(int N) {
  CheckReport rep{"m0_product", {}};
  RFSeries prod = RFSeries::one(N);
  for (int n = 1; 2 * n - 1 <= N; ++n) {
    RFSeries odd = RFSeries::one(N), even = RFSeries::one(N);
    odd.set(2 * n - 1, -1);
    even.set(2 * n, RationalFunction(-qvar()));
    prod = prod * (odd * odd * even).inverse();
  }
  const RFSeries& m = m_series(0, N);
  compare_series(rep, "M_0 = prod (1 - T^{2n-1})^-2 (1 - qT^{2n})^-1", m.truncated(N), prod);
  std::map<int, RationalFunction> logs;
  for (int n = 1; n <= N; ++n) logs[n] = n % 2 ? RationalFunction(2) : RationalFunction(qvar());
  compare_series(rep, "Log M_0 = 2T + qT^2 + 2T^3 + ...", pleth_log(m.truncated(N)), series_of(N, logs));
  return rep;
}

}  // namespace detail

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"i_log",    "i_star_log", "i_star_product",
                                              "z_minus1", "m_minus1",   "m0_product"};
  return names;
}

/// Evaluates a named identity on both sides to degree N; mismatches are reported.
inline CheckReport verify_identity(const std::string& name, int N) {
  if (N < 4) throw RangeError("verify_identity needs N >= 4");
  static const std::map<std::string, std::function<CheckReport(int)>> table{
      {"i_log", detail::verify_i_log},       {"i_star_log", detail::verify_i_star_log},
      {"i_star_product", detail::verify_i_star_product}, {"z_minus1", detail::verify_z_minus1},
      {"m_minus1", detail::verify_m_minus1}, {"m0_product", detail::verify_m0_product}};
  auto it = table.find(name);
  if (it == table.end()) throw ParseError("unknown identity '" + name + "'");
  return it->second(N);
}

}  // namespace ncv
