#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ncv/algebra/errors.hpp"
#include "ncv/algebra/rational.hpp"

namespace ncv {

inline constexpr int kDefaultCutoff = 8;

/// Coefficient-domain hooks used by the series algorithms. The primary
/// template forwards to member functions; scalar types specialize it.
template <class C>
struct CoeffOps {
  static bool is_zero(const C& c) { return c.is_zero(); }
  static bool is_one(const C& c) { return c.is_one(); }
  static C zero_like(const C& proto) { return proto.scaled(0); }
  static C one_like(const C& proto) {
    if constexpr (requires { C::one_like(proto); })
      return C::one_like(proto);
    else
      return C(1);
  }
  static C scale(const C& c, const Rational& s) { return c.scaled(s); }
  static C inverse(const C& c) {
    if constexpr (requires { c.inverse(); }) {
      return c.inverse();
    } else {
      if (!c.is_monomial()) throw InverseOfNonUnit(c.to_string());
      return c.ipow(-1);
    }
  }
  static std::string render(const C& c) { return c.to_string(); }
};

template <>
struct CoeffOps<Rational> {
  static bool is_zero(const Rational& c) { return c == 0; }
  static bool is_one(const Rational& c) { return c == 1; }
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
  static Rational scale(const Rational& c, const Rational& s) { return c * s; }
  static Rational inverse(const Rational& c) {
    if (c == 0) throw InverseOfNonUnit("0");
    return 1 / c;
  }
  static std::string render(const Rational& c) { return c.get_str(); }
};

/// Formal power series sum_{d<=N} c_d T^d truncated at a cutoff N.
template <class C>
class TruncatedSeries {
 public:
  using Coeff = C;
  using Ops = CoeffOps<C>;

  TruncatedSeries(int cutoff, const C& zero)
      : coeffs_(static_cast<std::size_t>(std::max(cutoff, 0)) + 1, Ops::zero_like(zero)) {}
  explicit TruncatedSeries(int cutoff = kDefaultCutoff) : TruncatedSeries(cutoff, C{}) {}

  static TruncatedSeries one(int cutoff, const C& proto = C{}) {
    TruncatedSeries s(cutoff, proto);
    s.coeffs_[0] = Ops::one_like(proto);
    return s;
  }

  static TruncatedSeries from_coeffs(std::vector<C> coeffs, int cutoff) {
    if (coeffs.empty()) throw Error("from_coeffs needs at least one coefficient");
    TruncatedSeries s(cutoff, coeffs[0]);
    for (std::size_t d = 0; d < coeffs.size() && static_cast<int>(d) <= cutoff; ++d)
      s.coeffs_[d] = std::move(coeffs[d]);
    return s;
  }

  int cutoff() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  const C& coeff(int d) const {
    if (d < 0 || d > cutoff())
      throw CutoffExceeded("degree " + std::to_string(d) + " > cutoff " + std::to_string(cutoff()));
    return coeffs_[d];
  }
  void set(int d, C c) {
    if (d < 0 || d > cutoff()) return;
    coeffs_[d] = std::move(c);
  }
  const C& zero_proto() const { return coeffs_[0]; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return Ops::is_zero(c); });
  }

  TruncatedSeries truncated(int n) const {
    TruncatedSeries r(std::min(n, cutoff()), coeffs_[0]);
    for (int d = 0; d <= r.cutoff(); ++d) r.coeffs_[d] = coeffs_[d];
    return r;
  }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(coeffs_[0]))>;
    std::vector<D> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return TruncatedSeries<D>::from_coeffs(std::move(out), cutoff());
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = Ops::scale(c, -1);
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.cutoff(), b.cutoff());
    TruncatedSeries r = a.truncated(n);
    for (int d = 0; d <= n; ++d) r.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.cutoff(), b.cutoff());
    TruncatedSeries r = a.truncated(n);
    for (int d = 0; d <= n; ++d) r.coeffs_[d] = a.coeffs_[d] - b.coeffs_[d];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.cutoff(), b.cutoff());
    TruncatedSeries r(n, a.coeffs_[0]);
    for (int i = 0; i <= n; ++i) {
      if (Ops::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (Ops::is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }
  TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }
  TruncatedSeries& operator-=(const TruncatedSeries& b) { return *this = *this - b; }
  TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

  TruncatedSeries scaled(const Rational& s) const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = Ops::scale(c, s);
    return r;
  }

  /// Multiply every coefficient by a ring element.
  TruncatedSeries times(const C& c) const {
    TruncatedSeries r = *this;
    for (auto& x : r.coeffs_)
      if (!Ops::is_zero(x)) x = c * x;
    return r;
  }

  TruncatedSeries inverse() const {
    if (Ops::is_zero(coeffs_[0])) throw InverseOfNonUnit("series with zero constant term");
    C b0 = Ops::inverse(coeffs_[0]);
    TruncatedSeries r(cutoff(), coeffs_[0]);
    r.coeffs_[0] = b0;
    for (int n = 1; n <= cutoff(); ++n) {
      C acc = Ops::zero_like(coeffs_[0]);
      for (int k = 1; k <= n; ++k)
        if (!Ops::is_zero(coeffs_[k])) acc = acc + coeffs_[k] * r.coeffs_[n - k];
      r.coeffs_[n] = -(b0 * acc);
    }
    return r;
  }

  /// Ordinary logarithm; requires constant term exactly 1.
  TruncatedSeries log() const {
    if (!Ops::is_one(coeffs_[0]))
      throw LogOfNonUnit("constant term " + Ops::render(coeffs_[0]));
    TruncatedSeries g(cutoff(), coeffs_[0]);
    for (int n = 1; n <= cutoff(); ++n) {
      C acc = Ops::scale(coeffs_[n], n);
      for (int k = 1; k < n; ++k)
        if (!Ops::is_zero(g.coeffs_[k]) && !Ops::is_zero(coeffs_[n - k]))
          acc = acc - Ops::scale(g.coeffs_[k] * coeffs_[n - k], k);
      g.coeffs_[n] = Ops::scale(acc, make_rational(1, n));
    }
    return g;
  }

  /// Ordinary exponential; requires constant term 0.
  TruncatedSeries exp() const {
    if (!Ops::is_zero(coeffs_[0]))
      throw ExpOfNonzeroConstant("constant term " + Ops::render(coeffs_[0]));
    TruncatedSeries e = one(cutoff(), coeffs_[0]);
    for (int n = 1; n <= cutoff(); ++n) {
      C acc = Ops::zero_like(coeffs_[0]);
      for (int k = 1; k <= n; ++k)
        if (!Ops::is_zero(coeffs_[k]) && !Ops::is_zero(e.coeffs_[n - k]))
          acc = acc + Ops::scale(coeffs_[k] * e.coeffs_[n - k], k);
      e.coeffs_[n] = Ops::scale(acc, make_rational(1, n));
    }
    return e;
  }

  /// f^c := exp(c log f), for an exponent in the coefficient ring.
  TruncatedSeries pow(const C& c) const { return log().times(c).exp(); }
  TruncatedSeries pow_rational(const Rational& c) const { return log().scaled(c).exp(); }

  /// T -> T^k.
  TruncatedSeries stretch(int k) const {
    TruncatedSeries r(cutoff(), coeffs_[0]);
    for (int d = 0; d * k <= cutoff(); ++d) r.coeffs_[d * k] = coeffs_[d];
    return r;
  }

  /// T -> -T.
  TruncatedSeries sign_flip() const {
    TruncatedSeries r = *this;
    for (int d = 1; d <= cutoff(); d += 2) r.coeffs_[d] = Ops::scale(r.coeffs_[d], -1);
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.cutoff(), b.cutoff());
    for (int d = 0; d <= n; ++d)
      if (!(a.coeffs_[d] == b.coeffs_[d])) return false;
    return true;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  /// Lowest degree where the two series differ, or -1.
  int first_difference(const TruncatedSeries& b) const {
    int n = std::min(cutoff(), b.cutoff());
    for (int d = 0; d <= n; ++d)
      if (!(coeffs_[d] == b.coeffs_[d])) return d;
    return -1;
  }

  std::string to_string(const std::string& var = "T") const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= cutoff(); ++d) {
      if (Ops::is_zero(coeffs_[d])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << Ops::render(coeffs_[d]) << ")";
      if (d > 0) os << "*" << var << (d > 1 ? "^" + std::to_string(d) : "");
    }
    os << (first ? "" : " + ") << "O(" << var << "^" << cutoff() + 1 << ")";
    return os.str();
  }

 private:
  std::vector<C> coeffs_;
};

}  // namespace ncv
