#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncv/algebra/laurent_poly.hpp"
#include "ncv/algebra/poly_gcd.hpp"

namespace ncv {

/// Quotient of Laurent polynomials in canonical form.
///
/// The denominator is an integer-primitive polynomial with positive leading
/// coefficient that no variable divides; every monomial and rational scalar
/// lives in the numerator, and numerator and denominator are coprime.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  RationalFunction(int c) : num_(c), den_(1) {}                 // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}     // NOLINT(google-explicit-constructor)
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

  RationalFunction(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw ZeroDivisor(num.to_string() + " / 0");
    *this = from_coprime(num, den, true);
  }

  static RationalFunction variable(const std::string& name, int exponent = 1) {
    return RationalFunction(LaurentPoly::variable(name, exponent));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  Rational constant_value() const {
    if (!is_constant()) throw Error("not a constant: " + to_string());
    return num_.constant_value();
  }

  const LaurentPoly& as_polynomial() const {
    if (!is_polynomial()) throw DivisionNotExact("not a Laurent polynomial: " + to_string());
    return num_;
  }

  std::vector<std::string> variables() const {
    return LaurentPoly::merge_variables(num_.variables(), den_.variables());
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return a.add(b, false);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a.add(b, true);
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
    if (a.is_constant()) return b.scaled(a.num_.constant_value());
    if (b.is_constant()) return a.scaled(b.num_.constant_value());
    // Cross cancellation keeps the operands small.
    LaurentPoly g1 = a.den_.is_one() ? LaurentPoly(1) : multivar_gcd(b.num_, a.den_);
    LaurentPoly g2 = b.den_.is_one() ? LaurentPoly(1) : multivar_gcd(a.num_, b.den_);
    LaurentPoly n = a.num_.exact_div(g2) * b.num_.exact_div(g1);
    LaurentPoly d = a.den_.exact_div(g1) * b.den_.exact_div(g2);
    return from_coprime(n, d, false);
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  RationalFunction scaled(const Rational& c) const {
    if (c == 0) return {};
    RationalFunction r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of 0");
    return from_coprime(den_, num_, false);
  }

  RationalFunction pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r = *this;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
  }

  /// Every variable x becomes x^n.
  RationalFunction adams(int n) const {
    if (n == 1) return *this;
    return from_coprime(num_.adams(n), den_.adams(n), false);
  }

  RationalFunction adams(int n, const std::vector<std::string>& only) const {
    if (n == 1) return *this;
    return from_coprime(num_.adams(n, only), den_.adams(n, only), false);
  }

  RationalFunction evaluate_at(const std::string& name, const Rational& value) const {
    LaurentPoly d = den_.evaluate_at(name, value);
    if (d.is_zero())
      throw ZeroDivisor("pole of " + to_string() + " at " + name + "=" + value.get_str());
    return RationalFunction(num_.evaluate_at(name, value), d);
  }

  Rational evaluate(const std::map<std::string, Rational>& values) const {
    Rational d = den_.evaluate(values);
    if (d == 0) throw ZeroDivisor("pole of " + to_string());
    return num_.evaluate(values) / d;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
  }

  std::string to_latex() const {
    if (den_.is_one()) return num_.to_latex();
    return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.to_string();
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;

  /// Canonical form of num/den; the gcd step runs only when `reduce` is set.
  static RationalFunction from_coprime(LaurentPoly num, LaurentPoly den, bool reduce) {
    RationalFunction r;
    if (num.is_zero()) return r;
    if (den.is_constant()) {
      r.num_ = num.scaled(1 / den.constant_value());
      return r;
    }
    auto [md, d0] = den.split_monomial();
    std::vector<std::pair<std::string, int>> inv;
    for (std::size_t i = 0; i < den.variables().size(); ++i)
      if (md[i] != 0) inv.emplace_back(den.variables()[i], -md[i]);
    if (!inv.empty()) num *= LaurentPoly::monomial(1, inv);
    auto [cd, pd] = integer_primitive(d0);
    num = num.scaled(1 / cd);
    if (reduce && !pd.is_constant()) {
      LaurentPoly g = polynomial_gcd(num.split_monomial().second, pd);
      if (!g.is_one()) {
        num = num.exact_div(g);
        pd = pd.exact_div(g);
        auto [c2, p2] = integer_primitive(pd);
        num = num.scaled(1 / c2);
        pd = std::move(p2);
      }
    }
    if (pd.is_constant()) {
      r.num_ = num.scaled(1 / pd.constant_value());
      return r;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(pd);
    return r;
  }

  RationalFunction add(const RationalFunction& b, bool subtract) const {
    const RationalFunction& a = *this;
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_.is_one() && b.den_.is_one())
      return RationalFunction(subtract ? a.num_ - b.num_ : a.num_ + b.num_);
    if (a.den_ == b.den_) {
      LaurentPoly n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      if (n.is_zero()) return {};
      return from_coprime(n, a.den_, true);
    }
    if (a.den_.is_one() || b.den_.is_one()) {
      // p + n/d = (p*d + n)/d is already reduced.
      LaurentPoly n = a.den_.is_one()
                          ? a.num_ * b.den_ + (subtract ? -b.num_ : b.num_)
                          : a.num_ + (subtract ? -(b.num_ * a.den_) : b.num_ * a.den_);
      return from_coprime(n, a.den_.is_one() ? b.den_ : a.den_, false);
    }
    LaurentPoly g = polynomial_gcd(a.den_, b.den_);
    LaurentPoly bq = a.den_.exact_div(g), dq = b.den_.exact_div(g);
    LaurentPoly t = a.num_ * dq + (subtract ? -(b.num_ * bq) : b.num_ * bq);
    if (t.is_zero()) return {};
    LaurentPoly h = g.is_one() ? LaurentPoly(1) : polynomial_gcd(t.split_monomial().second, g);
    return from_coprime(t.exact_div(h), bq * b.den_.exact_div(h), false);
  }
};

}  // namespace ncv
