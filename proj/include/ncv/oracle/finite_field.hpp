#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncv/algebra/errors.hpp"

namespace ncv {

inline constexpr int kMaxFieldSize = 1 << 20;

namespace detail {

/// (p, e) with q = p^e, or (0, 0) if q is not a prime power.
inline std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int e = 0;
  for (int m = q; m > 1; m /= p, ++e)
    if (m % p != 0) return {0, 0};
  return {p, e};
}

inline std::vector<int> prime_factors(std::int64_t m) {
  std::vector<int> out;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(static_cast<int>(d));
      while (m % d == 0) m /= d;
    }
  if (m > 1) out.push_back(static_cast<int>(m));
  return out;
}

// Dense polynomials over F_p, coefficients low to high.
using DensePoly = std::vector<int>;

inline void trim(DensePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline DensePoly poly_mod(DensePoly a, const DensePoly& m, int p) {
  trim(a);
  int dm = static_cast<int>(m.size()) - 1;
  int inv_lead = 1;
  for (int x = 1; x < p; ++x)
    if (x * m.back() % p == 1) inv_lead = x;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int f = a.back() * inv_lead % p;
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - f * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

inline bool irreducible(const DensePoly& f, int p) {
  int e = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= e; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      DensePoly g(d + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i, c /= p) g[i] = static_cast<int>(c % p);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// F_q for an odd prime power q. Elements are codes 0..q-1 whose base-p digits
/// are the coefficients of a polynomial in a root `a` of the modulus.
class FiniteField {
 public:
  explicit FiniteField(int q) : q_(q) {
    auto [p, e] = detail::prime_power(q);
    if (p == 0) throw RangeError(std::to_string(q) + " is not a prime power");
    if (p == 2) throw RangeError("characteristic 2 is excluded");
    if (q > kMaxFieldSize) throw BudgetExceeded("field of size " + std::to_string(q));
    p_ = p;
    e_ = e;
    choose_modulus();
    build_tables();
  }

  int size() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  const std::vector<int>& modulus() const { return modulus_; }
  int generator() const { return generator_; }

  int add(int a, int b) const {
    if (e_ == 1) return (a + b) % p_;
    int r = 0;
    for (int i = 0, w = 1; i < e_; ++i, w *= p_) r += ((a / w % p_ + b / w % p_) % p_) * w;
    return r;
  }
  int neg(int a) const {
    if (e_ == 1) return (p_ - a) % p_;
    int r = 0;
    for (int i = 0, w = 1; i < e_; ++i, w *= p_) r += ((p_ - a / w % p_) % p_) * w;
    return r;
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<int>(static_cast<long>(a) * b % p_);
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  int inv(int a) const {
    if (a == 0) throw ZeroDivisor("inverse of 0 in F_" + std::to_string(q_));
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  int pow(int a, long n) const {
    if (a == 0) return n == 0 ? 1 : 0;
    long m = q_ - 1;
    long k = (static_cast<long>(log_[a]) * (n % m) % m + m) % m;
    return exp_[k];
  }
  int log(int a) const {
    if (a == 0) throw ZeroDivisor("log of 0");
    return log_[a];
  }
  int exp(long k) const {
    long m = q_ - 1;
    return exp_[((k % m) + m) % m];
  }
  int frobenius(int a) const { return pow(a, p_); }

  /// Image of an integer under Z -> F_p -> F_q.
  int from_int(long k) const { return static_cast<int>(((k % p_) + p_) % p_); }

  std::string to_string(int a) const {
    if (e_ == 1) return std::to_string(a);
    std::string s;
    for (int i = e_ - 1, w = ipow(p_, e_ - 1); i >= 0; --i, w /= p_) {
      int c = a / w % p_;
      if (c == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || c != 1) s += std::to_string(c);
      if (i >= 1) s += i == 1 ? "a" : "a^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  static int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
  }

  // Smallest monic irreducible modulus, ordered by the code of its lower coefficients.
  void choose_modulus() {
    if (e_ == 1) {
      modulus_ = {0, 1};
      return;
    }
    int count = ipow(p_, e_);
    for (int code = 1; code < count; ++code) {
      detail::DensePoly f(e_ + 1, 0);
      for (int i = 0, c = code; i < e_; ++i, c /= p_) f[i] = c % p_;
      f[e_] = 1;
      if (f[0] != 0 && detail::irreducible(f, p_)) {
        modulus_ = f;
        return;
      }
    }
    throw Error("no irreducible polynomial found");
  }

  int slow_mul(int a, int b) const {
    if (e_ == 1) return static_cast<int>(static_cast<long>(a) * b % p_);
    detail::DensePoly x(e_, 0), y(e_, 0), z(2 * e_, 0);
    for (int i = 0; i < e_; ++i, a /= p_, b /= p_) {
      x[i] = a % p_;
      y[i] = b % p_;
    }
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
    z = detail::poly_mod(z, modulus_, p_);
    int r = 0;
    for (int i = static_cast<int>(z.size()) - 1; i >= 0; --i) r = r * p_ + z[i];
    return r;
  }

  void build_tables() {
    long order = q_ - 1;
    auto factors = detail::prime_factors(order);
    auto slow_pow = [&](int g, long n) {
      int r = 1, b = g;
      for (; n > 0; n >>= 1) {
        if (n & 1) r = slow_mul(r, b);
        b = slow_mul(b, b);
      }
      return r;
    };
    for (int g = 2; g < q_; ++g) {
      bool ok = true;
      for (int l : factors)
        if (slow_pow(g, order / l) == 1) ok = false;
      if (ok) {
        generator_ = g;
        break;
      }
    }
    if (generator_ == 0) throw Error("F_" + std::to_string(q_) + " has no generator");
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    int x = 1;
    for (long k = 0; k < order; ++k) {
      if (log_[x] != -1) throw Error("multiplicative group of F_" + std::to_string(q_) + " is not cyclic");
      exp_[k] = x;
      log_[x] = static_cast<int>(k);
      x = slow_mul(x, generator_);
    }
    if (x != 1) throw Error("generator order mismatch");
  }

  int q_, p_ = 0, e_ = 0, generator_ = 0;
  std::vector<int> modulus_;
  std::vector<int> exp_, log_;
};

}  // namespace ncv
