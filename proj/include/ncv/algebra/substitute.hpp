#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncv/algebra/laurent_poly.hpp"
#include "ncv/algebra/rational_function.hpp"
#include "ncv/algebra/series.hpp"

namespace ncv {

using SubstitutionMap = std::map<std::string, LaurentPoly>;

/// Simultaneous substitution of variables by Laurent polynomials. Negative
/// powers are only allowed on variables whose image is a monomial.
inline LaurentPoly substitute(const LaurentPoly& f, const SubstitutionMap& map) {
  const auto& vars = f.variables();
  std::vector<const LaurentPoly*> images(vars.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = map.find(vars[i]);
    if (it != map.end()) {
      images[i] = &it->second;
      any = true;
    }
  }
  if (!any) return f;
  std::vector<std::map<int, LaurentPoly>> cache(vars.size());
  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto it = cache[i].find(e);
    if (it == cache[i].end()) it = cache[i].emplace(e, images[i]->ipow(e)).first;
    return it->second;
  };
  LaurentPoly result;
  for (const auto& t : f.terms()) {
    std::vector<std::pair<std::string, int>> kept;
    LaurentPoly term(t.coeff);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (images[i])
        term *= power(i, t.exps[i]);
      else
        kept.emplace_back(vars[i], t.exps[i]);
    }
    if (!kept.empty()) term *= LaurentPoly::monomial(1, kept);
    result += term;
  }
  return result;
}

/// Substitution into a rational function; the monomial part of numerator and
/// denominator is mapped separately so non-monomial images of a variable that
/// occurs with negative exponent are still handled.
inline RationalFunction substitute(const RationalFunction& f, const SubstitutionMap& map) {
  auto side = [&](const LaurentPoly& p) {
    auto [m, p0] = p.split_monomial();
    RationalFunction mono(1);
    std::vector<std::pair<std::string, int>> kept;
    for (std::size_t i = 0; i < p.variables().size(); ++i) {
      if (m[i] == 0) continue;
      auto it = map.find(p.variables()[i]);
      if (it == map.end())
        kept.emplace_back(p.variables()[i], m[i]);
      else
        mono *= RationalFunction(it->second).pow(m[i]);
    }
    if (!kept.empty()) mono *= RationalFunction(LaurentPoly::monomial(1, kept));
    return RationalFunction(substitute(p0, map)) * mono;
  };
  RationalFunction d = side(f.den());
  if (d.is_zero()) throw ZeroDivisor("substitution makes the denominator of " + f.to_string() + " vanish");
  return side(f.num()) / d;
}

template <class C>
TruncatedSeries<C> substitute(const TruncatedSeries<C>& f, const SubstitutionMap& map) {
  return f.map([&](const C& c) { return C(substitute(c, map)); });
}

/// Rewrites a function of u that is even in u as a function of q = u^2.
inline LaurentPoly halve_exponents(const LaurentPoly& p, const std::string& u,
                                   const std::string& q) {
  int iu = p.var_index(u);
  if (iu < 0) return p;
  LaurentPoly result;
  for (const auto& t : p.terms()) {
    if (t.exps[iu] % 2 != 0)
      throw OddPowersRemain(u + "^" + std::to_string(t.exps[iu]) + " in " + p.to_string());
    std::vector<std::pair<std::string, int>> powers;
    for (std::size_t i = 0; i < p.variables().size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (static_cast<int>(i) == iu)
        powers.emplace_back(q, t.exps[i] / 2);
      else
        powers.emplace_back(p.variables()[i], t.exps[i]);
    }
    result += LaurentPoly::monomial(t.coeff, powers);
  }
  return result;
}

/// Even rational functions of u have even canonical numerator and
/// denominator (an odd denominator would be divisible by u).
inline RationalFunction halve_exponents(const RationalFunction& f, const std::string& u,
                                        const std::string& q) {
  return RationalFunction(halve_exponents(f.num(), u, q), halve_exponents(f.den(), u, q));
}

}  // namespace ncv
