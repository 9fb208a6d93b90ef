#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ncv/algebra/laurent_poly.hpp"

namespace ncv {

/// p = c * prim with prim integer-primitive and positive leading coefficient.
inline std::pair<Rational, LaurentPoly> integer_primitive(const LaurentPoly& p) {
  if (p.is_zero()) return {Rational(0), LaurentPoly{}};
  Integer den = p.denominator_lcm();
  LaurentPoly scaled = p.scaled(Rational(den));
  Integer content = scaled.integer_content();
  if (scaled.leading_coefficient() < 0) content = -content;
  Rational c(content, den);
  c.canonicalize();
  return {c, scaled.scaled(1 / Rational(content))};
}

namespace detail {

inline constexpr uint64_t kGcdPrime = 2147483647ULL;  // 2^31 - 1

inline uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline uint64_t mod_inv(uint64_t a, uint64_t p) { return mod_pow(a, p - 2, p); }

inline uint64_t mpz_mod_p(const Integer& z, uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

/// Degree of the gcd of two dense univariate polynomials mod p.
inline int univariate_gcd_degree(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
  auto trim = [](std::vector<uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    uint64_t inv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
      uint64_t f = a.back() * inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = (a[i + shift] + p - f * b[i] % p) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

/// Image of an integer polynomial in F_p[x_v] after evaluating the other variables.
inline std::vector<uint64_t> reduce_to_univariate(const LaurentPoly& f, int v,
                                                   const std::vector<uint64_t>& point,
                                                   uint64_t p) {
  std::vector<uint64_t> out(static_cast<std::size_t>(f.degree(f.variables()[v])) + 1, 0);
  for (const auto& t : f.terms()) {
    uint64_t c = mpz_mod_p(t.coeff.get_num(), p);
    for (std::size_t i = 0; i < f.variables().size(); ++i)
      if (static_cast<int>(i) != v) c = c * mod_pow(point[i], t.exps[i], p) % p;
    auto& slot = out[t.exps[v]];
    slot = (slot + c) % p;
  }
  return out;
}

inline Integer isqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline LaurentPoly symmetric_mod(const LaurentPoly& h, const Integer& xi) {
  std::vector<LaurentPoly::Term> terms;
  Integer half = xi / 2;
  for (const auto& t : h.terms()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    if (r != 0) terms.push_back({t.exps, Rational(r)});
  }
  return LaurentPoly::from_terms(h.variables(), std::move(terms));
}

inline LaurentPoly interpolate(LaurentPoly h, const Integer& xi, const std::string& var) {
  LaurentPoly result;
  Rational inv_xi(Integer(1), xi);
  int i = 0;
  while (!h.is_zero()) {
    LaurentPoly g = symmetric_mod(h, xi);
    result += g * LaurentPoly::variable(var, i);
    h = (h - g).scaled(inv_xi);
    ++i;
  }
  if (result.leading_coefficient() < 0) result = -result;
  return result;
}

inline bool divides_polynomially(const LaurentPoly& h, const LaurentPoly& f) {
  auto q = f.try_divide(h);
  return q && q->is_polynomial();
}

inline std::optional<LaurentPoly> heuristic(const LaurentPoly& f, const LaurentPoly& g) {
  Integer cf = f.integer_content(), cg = g.integer_content();
  Integer c = gcd(cf, cg);
  if (f.is_constant() || g.is_constant()) return LaurentPoly(Rational(c));
  LaurentPoly fp = f.scaled(Rational(Integer(1), c)), gp = g.scaled(Rational(Integer(1), c));
  auto vars = LaurentPoly::merge_variables(fp.variables(), gp.variables());
  const std::string& x = vars.front();
  Integer fn = fp.max_norm(), gn = gp.max_norm();
  Integer xi = 2 * (fn < gn ? fn : gn) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    LaurentPoly ff = fp.evaluate_at(x, Rational(xi)), gg = gp.evaluate_at(x, Rational(xi));
    if (!ff.is_zero() && !gg.is_zero()) {
      auto h = heuristic(ff, gg);
      if (!h) return std::nullopt;
      LaurentPoly cand = integer_primitive(interpolate(*h, xi, x)).second;
      if (!cand.is_zero() && divides_polynomially(cand, fp) && divides_polynomially(cand, gp))
        return cand.scaled(Rational(c));
    }
    xi = 73794 * xi * isqrt(isqrt(xi)) / 27011;
  }
  return std::nullopt;
}

// ---- primitive PRS ---------------------------------------------------------

inline LaurentPoly prs_gcd(const LaurentPoly& a, const LaurentPoly& b);

inline std::vector<LaurentPoly> dense_in(const LaurentPoly& f, const std::string& x) {
  int d = f.degree(x);
  std::vector<LaurentPoly> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c[i] = f.coefficient(x, i);
  return c;
}

inline LaurentPoly from_dense(const std::vector<LaurentPoly>& c, const std::string& x) {
  LaurentPoly r;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) r += c[i] * LaurentPoly::variable(x, static_cast<int>(i));
  return r;
}

inline LaurentPoly content_in(const std::vector<LaurentPoly>& c) {
  LaurentPoly g;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? integer_primitive(x).second : prs_gcd(g, x);
    if (g.is_constant()) return LaurentPoly(1);
  }
  return g;
}

inline std::vector<LaurentPoly> primitive_dense(std::vector<LaurentPoly> c) {
  LaurentPoly cont = content_in(c);
  for (auto& x : c) x = x.exact_div(cont);
  LaurentPoly lead = c.back();
  if (lead.leading_coefficient() < 0)
    for (auto& x : c) x = -x;
  return c;
}

inline std::vector<LaurentPoly> pseudo_remainder(std::vector<LaurentPoly> a,
                                                 const std::vector<LaurentPoly>& b) {
  auto trim = [](std::vector<LaurentPoly>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  const LaurentPoly& lb = b.back();
  int steps = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
  while (!a.empty() && a.size() >= b.size()) {
    LaurentPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x = x * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
    --steps;
  }
  LaurentPoly factor = lb.pow(static_cast<unsigned>(std::max(steps, 0)));
  for (auto& x : a) x *= factor;
  return a;
}

inline LaurentPoly prs_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return integer_primitive(b).second;
  if (b.is_zero()) return integer_primitive(a).second;
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  auto vars = LaurentPoly::merge_variables(a.variables(), b.variables());
  const std::string& x = vars.front();
  auto da = dense_in(a, x), db = dense_in(b, x);
  LaurentPoly ca = content_in(da), cb = content_in(db);
  LaurentPoly c = prs_gcd(ca, cb);
  if (da.size() == 1 || db.size() == 1) return integer_primitive(c).second;
  da = primitive_dense(da);
  db = primitive_dense(db);
  if (da.size() < db.size()) std::swap(da, db);
  while (true) {
    auto r = pseudo_remainder(da, db);
    if (r.empty()) break;
    if (r.size() == 1) {
      db = {LaurentPoly(1)};
      break;
    }
    da = std::move(db);
    db = primitive_dense(std::move(r));
  }
  return integer_primitive(c * from_dense(db, x)).second;
}

}  // namespace detail

/// Rigorous coprimality certificate: true only if gcd(f,g) is a constant.
/// f and g must have integer coefficients and non-negative exponents.
inline bool coprime_fast(const LaurentPoly& f, const LaurentPoly& g) {
  using namespace detail;
  auto vars = LaurentPoly::merge_variables(f.variables(), g.variables());
  LaurentPoly fe = f.embedded(vars), ge = g.embedded(vars);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<uint64_t> dist(2, kGcdPrime - 1);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (f.degree(vars[v]) == 0 || g.degree(vars[v]) == 0) continue;
    std::vector<uint64_t> point(vars.size());
    for (auto& x : point) x = dist(rng);
    auto uf = reduce_to_univariate(fe, static_cast<int>(v), point, kGcdPrime);
    auto ug = reduce_to_univariate(ge, static_cast<int>(v), point, kGcdPrime);
    // The leading coefficients must survive the evaluation, otherwise the
    // image gcd may lose degree and the certificate is void.
    if (uf.back() == 0 || ug.back() == 0) return false;
    if (univariate_gcd_degree(uf, ug, kGcdPrime) != 0) return false;
  }
  return true;
}

/// gcd by the primitive polynomial remainder sequence (reference algorithm).
inline LaurentPoly gcd_prs(const LaurentPoly& a, const LaurentPoly& b) {
  return detail::prs_gcd(integer_primitive(a).second, integer_primitive(b).second);
}

/// gcd by heuristic integer evaluation/interpolation; nullopt when it gives up.
inline std::optional<LaurentPoly> gcd_heuristic(const LaurentPoly& a, const LaurentPoly& b) {
  auto h = detail::heuristic(integer_primitive(a).second, integer_primitive(b).second);
  if (!h) return std::nullopt;
  return integer_primitive(*h).second;
}

/// gcd of two polynomials (non-negative exponents) normalized to be
/// integer-primitive with positive leading coefficient.
inline LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroDivisor("gcd(0, 0)");
  if (a.is_zero()) return integer_primitive(b).second;
  if (b.is_zero()) return integer_primitive(a).second;
  LaurentPoly pa = integer_primitive(a).second, pb = integer_primitive(b).second;
  if (pa.is_constant() || pb.is_constant()) return LaurentPoly(1);
  if (pa == pb) return pa;
  if (coprime_fast(pa, pb)) return LaurentPoly(1);
  if (auto h = detail::heuristic(pa, pb)) return integer_primitive(*h).second;
  return detail::prs_gcd(pa, pb);
}

/// gcd in the Laurent ring, returned as a genuine polynomial; the common
/// monomial factor is kept so that gcd(q^2-1, q^2-q) = q-1.
inline LaurentPoly multivar_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& nz = a.is_zero() ? b : a;
    if (nz.is_zero()) throw ZeroDivisor("gcd(0, 0)");
    return integer_primitive(nz).second;
  }
  auto vars = LaurentPoly::merge_variables(a.variables(), b.variables());
  auto [ma, a0] = a.embedded(vars).split_monomial();
  auto [mb, b0] = b.embedded(vars).split_monomial();
  Exponents m{};
  for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::max(0, std::min(ma[i], mb[i]));
  LaurentPoly g = polynomial_gcd(a0, b0);
  std::vector<std::pair<std::string, int>> powers;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (m[i] != 0) powers.emplace_back(vars[i], m[i]);
  return g * LaurentPoly::monomial(1, powers);
}

}  // namespace ncv
