#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncv/algebra/substitute.hpp"
#include "ncv/check.hpp"
#include "ncv/punctured/cauchy.hpp"
#include "ncv/punctured/hh.hpp"
#include "ncv/sym/hooks.hpp"

namespace ncv {

namespace detail {

inline RationalFunction zw_factor() {
  return RationalFunction((zw("z", 2) - 1) * (1 - zw("w", 2)));
}

inline CheckReport check_lemma_rk1(int) {
  CheckReport rep{"lemma_rk1", {}};
  auto one = [&](const char* mu, const RationalFunction& expected) {
    RationalFunction got = hh_mu(1, 1, parse_partition_tuple(mu));
    rep.add(std::string("HH_(") + mu + ")", got == expected, got.to_string() + " vs " + expected.to_string());
  };
  one("1", RationalFunction(zw("z") - zw("w")));
  one("2", RationalFunction(LaurentPoly(1), zw("z", 2) + 1));
  one("1,1", RationalFunction(1));
  return rep;
}

/// (z^2-1)(1-w^2) Log Omega_{1,1} = (z-w) m_1 + m_2/(z^2+1) + m_11, all other
/// monomial coefficients zero, through the given degree.
inline CheckReport check_conj_0conj(int bound) {
  CheckReport rep{"conj_0conj", {}};
  const SymSeries& log = log_omega(1, 1, bound);
  std::map<Partition, RationalFunction> expected{
      {Partition{1}, RationalFunction(zw("z") - zw("w"))},
      {Partition{2}, RationalFunction(LaurentPoly(1), zw("z", 2) + 1)},
      {Partition{1, 1}, RationalFunction(1)}};
  for (int n = 1; n <= bound; ++n) {
    SymRF slice = log[n].converted(Basis::m);
    for (const auto& lam : partitions_of(n)) {
      RationalFunction got = slice.coefficient({lam}) * zw_factor();
      auto it = expected.find(lam);
      RationalFunction want = it == expected.end() ? RationalFunction() : it->second;
      rep.add("m_" + lam.to_string(), got == want, got == want ? "" : "coefficient " + got.to_string());
    }
  }
  return rep;
}

inline CheckReport check_euler_spec(int bound) {
  CheckReport rep{"euler_spec", {}};
  LaurentPoly u = zw("u");
  SubstitutionMap spec{{"z", u}, {"w", zw("u", -1)}};
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= bound; ++n)
      for (const auto& lam : partitions_of(n)) {
        int rho = r - 2;
        RationalFunction lhs = substitute(deformed_hook(r, lam), spec);
        RationalFunction rhs = RationalFunction(zw("u", -rho * lam.self_pairing())) *
                               RationalFunction(hook_polynomial(lam, "u").adams(2)).pow(rho);
        rep.add("r=" + std::to_string(r) + " " + lam.to_string(), lhs == rhs,
                lhs == rhs ? "" : lhs.to_string() + " vs " + rhs.to_string());
      }
  return rep;
}

inline CheckReport check_sign_symmetry(int bound) {
  CheckReport rep{"sign_symmetry", {}};
  SubstitutionMap swap{{"z", zw("w")}, {"w", zw("z")}};
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= bound; ++n)
      for (const auto& lam : partitions_of(n)) {
        RationalFunction lhs = substitute(deformed_hook(r, lam), swap);
        RationalFunction rhs = deformed_hook(r, lam.conjugate());
        if ((r * n) % 2) rhs = -rhs;
        rep.add("r=" + std::to_string(r) + " " + lam.to_string(), lhs == rhs,
                lhs == rhs ? "" : lhs.to_string() + " vs " + rhs.to_string());
      }
  return rep;
}

/// Denominators of HH_mu for r = k = 1 divide a power of z^2+1 and are
/// nontrivial only for n = 2 mod 4 with all parts even. Reported, not enforced.
inline CheckReport check_denominators(int bound) {
  CheckReport rep{"denominators", {}};
  LaurentPoly base = zw("z", 2) + 1;
  for (int n = 1; n <= bound; ++n)
    for (const auto& lam : partitions_of(n)) {
      RationalFunction h = hh_mu(1, 1, {lam});
      LaurentPoly den = h.den();
      while (!den.is_constant()) {
        auto q = den.try_divide(base);
        if (!q) break;
        den = *q;
      }
      bool divides = den.is_constant();
      bool all_even = true;
      for (int p : lam.parts()) all_even = all_even && p % 2 == 0;
      bool nontrivial_allowed = n % 4 == 2 && all_even;
      bool ok = divides && (h.den().is_constant() || nontrivial_allowed);
      rep.add("HH_(" + lam.to_string() + ")", ok, "denominator " + h.den().to_string(), true);
    }
  return rep;
}

}  // namespace detail

inline const std::vector<std::string>& conjecture_check_names() {
  static const std::vector<std::string> names{"lemma_rk1", "conj_0conj", "euler_spec", "sign_symmetry",
                                              "denominators"};
  return names;
}

inline CheckReport conjecture_checks(const std::string& which, int bound) {
  static const std::map<std::string, std::function<CheckReport(int)>> table{
      {"lemma_rk1", detail::check_lemma_rk1},         {"conj_0conj", detail::check_conj_0conj},
      {"euler_spec", detail::check_euler_spec},       {"sign_symmetry", detail::check_sign_symmetry},
      {"denominators", detail::check_denominators}};
  auto it = table.find(which);
  if (it == table.end()) throw ParseError("unknown check '" + which + "'");
  if (bound < 1) throw RangeError("bound must be positive");
  bool uses_macdonald = which == "conj_0conj" || which == "denominators";
  if (uses_macdonald && bound > kMacdonaldBound)
    throw BoundExceeded("bound " + std::to_string(bound) + " > " + std::to_string(kMacdonaldBound));
  return it->second(bound);
}

}  // namespace ncv
