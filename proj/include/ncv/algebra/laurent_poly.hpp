#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <iterator>
#include <utility>
#include <vector>

#include "ncv/algebra/errors.hpp"
#include "ncv/algebra/rational.hpp"

namespace ncv {

inline constexpr std::size_t kMaxVars = 6;
using Exponents = std::array<int32_t, kMaxVars>;

/// Global variable precedence. Variables earlier in this list are "larger"
/// in the lexicographic tie-break of the graded order, and are printed first.
inline int variable_rank(std::string_view name) {
  static constexpr std::array<std::string_view, 8> kKnown = {"z", "w", "u", "t",
                                                            "q", "X", "Y", "T"};
  for (std::size_t i = 0; i < kKnown.size(); ++i)
    if (kKnown[i] == name) return static_cast<int>(i);
  return static_cast<int>(kKnown.size());
}

inline bool variable_less(const std::string& a, const std::string& b) {
  int ra = variable_rank(a), rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Strict "a comes before b" in graded-lexicographic descending order.
inline bool grlex_greater(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept sorted in graded-lexicographic descending order and the
/// variable list only contains variables that actually occur, sorted by
/// `variable_less`. Both choices make structural equality coincide with
/// mathematical equality.
class LaurentPoly {
 public:
  struct Term {
    Exponents exps{};
    Rational coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c) {                   // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back(Term{Exponents{}, c});
  }

  static LaurentPoly variable(const std::string& name, int exponent = 1) {
    LaurentPoly p;
    p.vars_ = {name};
    Term t;
    t.exps[0] = exponent;
    t.coeff = 1;
    p.terms_.push_back(t);
    p.prune_variables();
    return p;
  }

  static LaurentPoly monomial(const Rational& c,
                              const std::vector<std::pair<std::string, int>>& powers) {
    LaurentPoly p(c);
    for (const auto& [name, e] : powers) p *= variable(name, e);
    return p;
  }

  static LaurentPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
    if (vars.size() > kMaxVars) throw TooManyVariables(std::to_string(vars.size()));
    // Bring the variable list into canonical order, permuting exponents.
    std::vector<std::size_t> perm(vars.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return variable_less(vars[a], vars[b]); });
    std::vector<std::string> sorted;
    for (std::size_t i : perm) sorted.push_back(vars[i]);
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1]) throw Error("duplicate variable " + sorted[i]);
    for (auto& t : terms) {
      Exponents e{};
      for (std::size_t i = 0; i < perm.size(); ++i) e[i] = t.exps[perm[i]];
      t.exps = e;
    }
    LaurentPoly p;
    p.vars_ = std::move(sorted);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool is_one() const { return is_constant() && terms_.size() == 1 && terms_[0].coeff == 1; }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
  }

  Rational constant_term() const {
    for (const auto& t : terms_)
      if (t.exps == Exponents{}) return t.coeff;
    return 0;
  }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool has_variable(const std::string& name) const { return var_index(name) >= 0; }

  int degree(const std::string& name) const {
    int i = var_index(name);
    if (i < 0 || terms_.empty()) return 0;
    int d = terms_[0].exps[i];
    for (const auto& t : terms_) d = std::max(d, t.exps[i]);
    return d;
  }

  int min_degree(const std::string& name) const {
    int i = var_index(name);
    if (i < 0 || terms_.empty()) return 0;
    int d = terms_[0].exps[i];
    for (const auto& t : terms_) d = std::min(d, t.exps[i]);
    return d;
  }

  int total_degree() const {
    return terms_.empty() ? 0 : ncv::total_degree(terms_[0].exps);
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
  }
  Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_[0].coeff; }

  /// True when every exponent is non-negative.
  bool is_polynomial() const {
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (t.exps[i] < 0) return false;
    return true;
  }

  bool has_integer_coefficients() const {
    for (const auto& t : terms_)
      if (t.coeff.get_den() != 1) return false;
    return true;
  }

  // ---- arithmetic --------------------------------------------------------

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return combine(a, b, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return combine(a, b, true);
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
    if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
    auto [vars, ea, eb] = unify(a, b);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
      Exponents xa = remap(ta.exps, ea);
      for (const auto& tb : b.terms_) {
        Exponents xb = remap(tb.exps, eb);
        Term t;
        for (std::size_t i = 0; i < kMaxVars; ++i) t.exps[i] = xa[i] + xb[i];
        t.coeff = ta.coeff * tb.coeff;
        prod.push_back(std::move(t));
      }
    }
    LaurentPoly r;
    r.vars_ = std::move(vars);
    r.terms_ = std::move(prod);
    r.normalize();
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  LaurentPoly scaled(const Rational& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  /// Multiply by the monomial x^e (exponents indexed like this polynomial's variables).
  LaurentPoly shifted(const Exponents& e) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i) t.exps[i] += e[i];
    r.prune_variables();
    return r;
  }

  LaurentPoly pow(unsigned e) const {
    LaurentPoly result(1), base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Integer power; negative exponents need a monomial (a unit of the ring).
  LaurentPoly ipow(int e) const {
    if (e >= 0) return pow(static_cast<unsigned>(e));
    if (!is_monomial()) throw DivisionNotExact("negative power of non-monomial " + to_string());
    LaurentPoly r = *this;
    Term& t = r.terms_[0];
    for (auto& x : t.exps) x *= e;
    t.coeff = rpow(t.coeff, e);
    return r;
  }

  /// Minimal exponent of each variable (the "monomial content").
  Exponents min_exponents() const {
    Exponents m{};
    if (terms_.empty()) return m;
    m = terms_[0].exps;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.exps[i]);
    return m;
  }

  /// Writes this as x^alpha * p0 with p0 a polynomial divisible by no variable.
  std::pair<Exponents, LaurentPoly> split_monomial() const {
    Exponents m = min_exponents();
    Exponents neg{};
    for (std::size_t i = 0; i < kMaxVars; ++i) neg[i] = -m[i];
    return {m, shifted(neg)};
  }

  /// Exact division in the Laurent polynomial ring; nullopt if not exact.
  std::optional<LaurentPoly> try_divide(const LaurentPoly& b) const {
    if (b.is_zero()) throw ZeroDivisor("division of " + to_string() + " by zero");
    if (is_zero()) return LaurentPoly{};
    if (b.is_constant()) return scaled(1 / b.terms_[0].coeff);
    auto [vars, ea, eb] = unify(*this, b);
    LaurentPoly a0 = reembed(ea, vars), b0 = b.reembed(eb, vars);
    Exponents ma = a0.min_exponents(), mb = b0.min_exponents();
    Exponents na{}, nb{}, shift{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      na[i] = -ma[i];
      nb[i] = -mb[i];
      shift[i] = ma[i] - mb[i];
    }
    a0 = a0.shifted_raw(na);
    b0 = b0.shifted_raw(nb);
    auto q = divide_polynomial(a0, b0);
    if (!q) return std::nullopt;
    LaurentPoly r = q->shifted_raw(shift);
    r.prune_variables();
    return r;
  }

  LaurentPoly exact_div(const LaurentPoly& b) const {
    auto q = try_divide(b);
    if (!q) throw DivisionNotExact(to_string() + " / " + b.to_string());
    return *q;
  }

  /// psi_n on the coefficient ring: every variable x becomes x^n.
  LaurentPoly adams(int n) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
      for (auto& e : t.exps) e *= n;
    return r;
  }

  /// psi_n restricted to the listed variables.
  LaurentPoly adams(int n, const std::vector<std::string>& only) const {
    LaurentPoly r = *this;
    for (const auto& name : only) {
      int i = var_index(name);
      if (i < 0) continue;
      for (auto& t : r.terms_) t.exps[i] *= n;
    }
    r.normalize();
    return r;
  }

  /// Substitute a rational value for one variable.
  LaurentPoly evaluate_at(const std::string& name, const Rational& value) const {
    int i = var_index(name);
    if (i < 0) return *this;
    if (value == 0 && min_degree(name) < 0)
      throw ZeroDivisor("evaluating negative power of " + name + " at 0");
    std::vector<Term> out;
    out.reserve(terms_.size());
    std::map<int, Rational> powers;
    for (const auto& t : terms_) {
      int e = t.exps[i];
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, rpow(value, e)).first;
      Term nt = t;
      nt.exps[i] = 0;
      nt.coeff *= it->second;
      out.push_back(std::move(nt));
    }
    LaurentPoly r;
    r.vars_ = vars_;
    r.terms_ = std::move(out);
    r.normalize();
    return r;
  }

  Rational evaluate(const std::map<std::string, Rational>& values) const {
    LaurentPoly r = *this;
    for (const auto& [name, v] : values) r = r.evaluate_at(name, v);
    if (!r.is_constant()) throw Error("evaluate: unassigned variables in " + r.to_string());
    return r.constant_value();
  }

  /// Coefficient of name^e, as a polynomial in the remaining variables.
  LaurentPoly coefficient(const std::string& name, int e) const {
    int i = var_index(name);
    if (i < 0) return e == 0 ? *this : LaurentPoly{};
    LaurentPoly r;
    r.vars_ = vars_;
    for (const auto& t : terms_)
      if (t.exps[i] == e) {
        Term nt = t;
        nt.exps[i] = 0;
        r.terms_.push_back(std::move(nt));
      }
    r.normalize();
    return r;
  }

  /// Coefficient of an exact monomial given by variable powers.
  Rational coefficient_of(const std::vector<std::pair<std::string, int>>& powers) const {
    Exponents e{};
    for (const auto& [name, d] : powers) {
      int i = var_index(name);
      if (i < 0) {
        if (d != 0) return 0;
        continue;
      }
      e[i] = d;
    }
    for (const auto& t : terms_)
      if (t.exps == e) return t.coeff;
    return 0;
  }

  /// Least common multiple of coefficient denominators.
  Integer denominator_lcm() const {
    Integer l = 1;
    for (const auto& t : terms_) l = lcm(l, t.coeff.get_den());
    return l;
  }

  /// gcd of the numerators of all coefficients (assumes integer coefficients).
  Integer integer_content() const {
    Integer g = 0;
    for (const auto& t : terms_) g = gcd(g, t.coeff.get_num());
    return g;
  }

  /// Max absolute value of (integer) coefficients.
  Integer max_norm() const {
    Integer m = 0;
    for (const auto& t : terms_) {
      Integer a = abs(t.coeff.get_num());
      if (a > m) m = a;
    }
    return m;
  }

  // ---- rendering ----------------------------------------------------------

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = t.coeff < 0;
      Rational a = neg ? Rational(-t.coeff) : t.coeff;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      std::string mono = monomial_string(t.exps, false);
      if (mono.empty()) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << mono;
      }
    }
    return os.str();
  }

  std::string to_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = t.coeff < 0;
      Rational a = neg ? Rational(-t.coeff) : t.coeff;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      std::string mono = monomial_string(t.exps, true);
      std::string coeff = a.get_den() == 1
                              ? a.get_num().get_str()
                              : "\\frac{" + a.get_num().get_str() + "}{" +
                                    a.get_den().get_str() + "}";
      if (mono.empty())
        os << coeff;
      else {
        if (a != 1) os << coeff;
        os << mono;
      }
    }
    return os.str();
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Total order used only for keyed containers.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.to_string() < b.to_string();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
  }

  // ---- low level helpers (public for the gcd module) -----------------------

  /// Positions of this polynomial's variables inside `vars` (a superset).
  std::vector<int> embedding_into(const std::vector<std::string>& vars) const {
    std::vector<int> pos;
    for (const auto& v : vars_) {
      auto it = std::find(vars.begin(), vars.end(), v);
      if (it == vars.end()) throw Error("variable " + v + " missing from embedding");
      pos.push_back(static_cast<int>(it - vars.begin()));
    }
    return pos;
  }

  /// Same polynomial with exponent vectors laid out for the (superset) list `vars`.
  /// The result is not pruned; used for intermediate computations.
  LaurentPoly reembed(const std::vector<int>& pos, const std::vector<std::string>& vars) const {
    LaurentPoly r;
    r.vars_ = vars;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{remap(t.exps, pos), t.coeff});
    return r;
  }

  LaurentPoly embedded(const std::vector<std::string>& vars) const {
    return reembed(embedding_into(vars), vars);
  }

  static std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                                  const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                   variable_less);
    if (out.size() > kMaxVars) throw TooManyVariables(std::to_string(out.size()));
    return out;
  }

  void prune_variables() {
    std::vector<int> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      bool used = false;
      for (const auto& t : terms_)
        if (t.exps[i] != 0) {
          used = true;
          break;
        }
      if (used) keep.push_back(static_cast<int>(i));
    }
    if (keep.size() == vars_.size()) return;
    std::vector<std::string> nv;
    for (int i : keep) nv.push_back(vars_[i]);
    for (auto& t : terms_) {
      Exponents e{};
      for (std::size_t j = 0; j < keep.size(); ++j) e[j] = t.exps[keep[j]];
      t.exps = e;
    }
    vars_ = std::move(nv);
  }

 private:
  std::vector<std::string> vars_;
  std::vector<Term> terms_;

  static Exponents remap(const Exponents& e, const std::vector<int>& pos) {
    Exponents out{};
    for (std::size_t i = 0; i < pos.size(); ++i) out[pos[i]] = e[i];
    return out;
  }

  static std::tuple<std::vector<std::string>, std::vector<int>, std::vector<int>> unify(
      const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ == b.vars_) {
      std::vector<int> id(a.vars_.size());
      std::iota(id.begin(), id.end(), 0);
      return {a.vars_, id, id};
    }
    auto vars = merge_variables(a.vars_, b.vars_);
    return {vars, a.embedding_into(vars), b.embedding_into(vars)};
  }

  LaurentPoly shifted_raw(const Exponents& e) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i) t.exps[i] += e[i];
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.exps, y.exps); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exps == t.exps) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
    prune_variables();
  }

  /// Merge of two sorted term lists: a + sign*b.
  static LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    auto [vars, ea, eb] = unify(a, b);
    bool same_a = vars == a.vars_, same_b = vars == b.vars_;
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    auto get_a = [&](std::size_t k) { return same_a ? a.terms_[k].exps : remap(a.terms_[k].exps, ea); };
    auto get_b = [&](std::size_t k) { return same_b ? b.terms_[k].exps : remap(b.terms_[k].exps, eb); };
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        out.push_back(Term{get_a(i), a.terms_[i].coeff});
        ++i;
      } else if (i == a.terms_.size()) {
        out.push_back(Term{get_b(j), subtract ? Rational(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        Exponents xa = get_a(i), xb = get_b(j);
        if (xa == xb) {
          Rational c = subtract ? Rational(a.terms_[i].coeff - b.terms_[j].coeff)
                                : Rational(a.terms_[i].coeff + b.terms_[j].coeff);
          if (c != 0) out.push_back(Term{xa, c});
          ++i;
          ++j;
        } else if (grlex_greater(xa, xb)) {
          out.push_back(Term{xa, a.terms_[i].coeff});
          ++i;
        } else {
          out.push_back(Term{xb, subtract ? Rational(-b.terms_[j].coeff) : b.terms_[j].coeff});
          ++j;
        }
      }
    }
    LaurentPoly r;
    r.vars_ = std::move(vars);
    r.terms_ = std::move(out);
    r.prune_variables();
    return r;
  }

  /// Exact division of polynomials (non-negative exponents, same layout).
  static std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& a, const LaurentPoly& b) {
    const Term& lb = b.terms_.front();
    std::vector<Term> quotient;
    LaurentPoly rem = a;
    rem.vars_ = a.vars_;
    while (!rem.terms_.empty()) {
      const Term& lr = rem.terms_.front();
      Term t;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        t.exps[i] = lr.exps[i] - lb.exps[i];
        if (t.exps[i] < 0) return std::nullopt;
      }
      t.coeff = lr.coeff / lb.coeff;
      // rem -= t * b; multiplying by a monomial preserves the term order.
      LaurentPoly tb;
      tb.vars_ = a.vars_;
      tb.terms_.reserve(b.terms_.size());
      for (const auto& s : b.terms_) {
        Term u;
        for (std::size_t i = 0; i < kMaxVars; ++i) u.exps[i] = s.exps[i] + t.exps[i];
        u.coeff = s.coeff * t.coeff;
        tb.terms_.push_back(std::move(u));
      }
      quotient.push_back(t);
      rem = merge_same_layout(rem, tb);
    }
    // Quotient terms come out in strictly decreasing order; keep the layout.
    LaurentPoly q;
    q.vars_ = a.vars_;
    q.terms_ = std::move(quotient);
    return q;
  }

  /// a - b for two polynomials sharing the same variable layout (no pruning).
  static LaurentPoly merge_same_layout(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        out.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size()) {
        out.push_back(Term{b.terms_[j].exps, -b.terms_[j].coeff});
        ++j;
      } else if (a.terms_[i].exps == b.terms_[j].exps) {
        Rational c = a.terms_[i].coeff - b.terms_[j].coeff;
        if (c != 0) out.push_back(Term{a.terms_[i].exps, c});
        ++i;
        ++j;
      } else if (grlex_greater(a.terms_[i].exps, b.terms_[j].exps)) {
        out.push_back(a.terms_[i++]);
      } else {
        out.push_back(Term{b.terms_[j].exps, -b.terms_[j].coeff});
        ++j;
      }
    }
    LaurentPoly r;
    r.vars_ = a.vars_;
    r.terms_ = std::move(out);
    return r;
  }

  std::string monomial_string(const Exponents& e, bool latex) const {
    std::string s;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += latex ? " " : "*";
      s += vars_[i];
      if (e[i] != 1) {
        s += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
      }
    }
    return s;
  }
};

}  // namespace ncv
