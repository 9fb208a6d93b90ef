#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncv/algebra/errors.hpp"
#include "ncv/algebra/rational.hpp"
#include "ncv/algebra/series.hpp"
#include "ncv/sym/partition.hpp"

namespace ncv {

enum class Basis { m, p, h, s };

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::p: return "p";
    case Basis::h: return "h";
    case Basis::s: return "s";
  }
  return "?";
}

inline constexpr int kSymCutoff = 10;

using Expansion = std::map<Partition, Rational>;
using TransitionTable = std::map<Partition, Expansion>;

namespace detail {

/// Number of ways to distribute the parts of rho into blocks with sums lambda.
inline Integer p_to_m_count(const std::vector<int>& rho, std::size_t idx, std::vector<int>& room) {
  if (idx == rho.size()) {
    for (int r : room)
      if (r != 0) return 0;
    return 1;
  }
  Integer total = 0;
  for (auto& r : room) {
    if (r < rho[idx]) continue;
    r -= rho[idx];
    total += p_to_m_count(rho, idx + 1, room);
    r += rho[idx];
  }
  return total;
}

inline Expansion multiply_in_p(const Expansion& a, const Expansion& b) {
  Expansion out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) out[pa.merged(pb)] += ca * cb;
  return out;
}

/// h_n = sum_{rho |- n} p_rho / z_rho.
inline Expansion h_single_in_p(int n) {
  Expansion e;
  if (n < 0) return e;
  for (const auto& rho : partitions_of(n, kSymCutoff)) e[rho] = Rational(Integer(1), rho.z());
  return e;
}

inline TransitionTable invert_table(const TransitionTable& t, int n) {
  auto parts = partitions_of(n, kSymCutoff);
  std::size_t N = parts.size();
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < N; ++i) index[parts[i]] = i;
  // Row i expresses basis element i in power sums; Gauss-Jordan on [A | I].
  std::vector<std::vector<Rational>> a(N, std::vector<Rational>(2 * N, 0));
  for (const auto& [src, exp] : t)
    for (const auto& [dst, c] : exp) a[index.at(src)][index.at(dst)] = c;
  for (std::size_t i = 0; i < N; ++i) a[i][N + i] = 1;
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    while (piv < N && a[piv][col] == 0) ++piv;
    if (piv == N) throw Error("singular transition matrix");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * N; ++c) a[r][c] -= f * a[col][c];
    }
  }
  // A^{-1}: p_j = sum_i Ainv[j][i] b_i.
  TransitionTable inv;
  for (std::size_t j = 0; j < N; ++j) {
    Expansion e;
    for (std::size_t i = 0; i < N; ++i)
      if (a[j][N + i] != 0) e[parts[i]] = a[j][N + i];
    inv[parts[j]] = std::move(e);
  }
  return inv;
}

inline TransitionTable build_to_p(Basis b, int n) {
  TransitionTable t;
  auto parts = partitions_of(n, kSymCutoff);
  switch (b) {
    case Basis::p:
      for (const auto& l : parts) t[l] = Expansion{{l, 1}};
      break;
    case Basis::m: {
      // Columns of p -> m give m in terms of p after inversion.
      TransitionTable p2m;
      for (const auto& rho : parts) {
        Expansion e;
        for (const auto& lam : parts) {
          std::vector<int> room = lam.parts();
          Integer c = p_to_m_count(rho.parts(), 0, room);
          if (c != 0) e[lam] = Rational(c);
        }
        p2m[rho] = std::move(e);
      }
      t = invert_table(p2m, n);
      break;
    }
    case Basis::h:
      for (const auto& l : parts) {
        Expansion e{{Partition{}, 1}};
        for (int part : l.parts()) e = multiply_in_p(e, h_single_in_p(part));
        t[l] = std::move(e);
      }
      break;
    case Basis::s:
      // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
      for (const auto& l : parts) {
        int len = l.length();
        std::vector<int> perm(len);
        std::iota(perm.begin(), perm.end(), 0);
        Expansion total;
        do {
          int inversions = 0;
          for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j)
              if (perm[i] > perm[j]) ++inversions;
          Expansion e{{Partition{}, inversions % 2 ? -1 : 1}};
          bool vanish = false;
          for (int i = 0; i < len && !vanish; ++i) {
            int deg = l[i] - i + perm[i];
            if (deg < 0) vanish = true;
            else if (deg > 0) e = multiply_in_p(e, h_single_in_p(deg));
          }
          if (vanish) continue;
          for (const auto& [k, c] : e) total[k] += c;
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (auto it = total.begin(); it != total.end();)
          it = it->second == 0 ? total.erase(it) : std::next(it);
        t[l] = std::move(total);
      }
      break;
  }
  return t;
}

struct TableCache {
  std::mutex mu;
  std::map<std::pair<int, int>, TransitionTable> to_p, from_p;
};

inline TableCache& table_cache() {
  static TableCache cache;
  return cache;
}

}  // namespace detail

/// Expansion of basis b elements of degree n in power sums.
inline const TransitionTable& to_p_table(Basis b, int n) {
  if (n > kSymCutoff) throw CutoffExceeded("symmetric function degree " + std::to_string(n));
  auto& c = detail::table_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto key = std::make_pair(static_cast<int>(b), n);
  auto it = c.to_p.find(key);
  if (it == c.to_p.end()) it = c.to_p.emplace(key, detail::build_to_p(b, n)).first;
  return it->second;
}

/// Expansion of power sums of degree n in basis b.
inline const TransitionTable& from_p_table(Basis b, int n) {
  const TransitionTable& fwd = to_p_table(b, n);
  auto& c = detail::table_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto key = std::make_pair(static_cast<int>(b), n);
  auto it = c.from_p.find(key);
  if (it == c.from_p.end()) it = c.from_p.emplace(key, detail::invert_table(fwd, n)).first;
  return it->second;
}

/// Symmetric function in k sets of variables, stored in one basis, with
/// terms keyed by a k-tuple of partitions (a tensor product of bases).
template <class C>
class SymFunc {
 public:
  using Key = PartitionTuple;
  using Ops = CoeffOps<C>;

  explicit SymFunc(int k = 1, Basis basis = Basis::m) : k_(k), basis_(basis) {}

  static SymFunc element(Basis b, Key key, C coeff = C(1)) {
    SymFunc f(static_cast<int>(key.size()), b);
    f.add(std::move(key), std::move(coeff));
    return f;
  }

  static SymFunc one_like(const SymFunc& proto) {
    return element(proto.basis_, Key(static_cast<std::size_t>(proto.k_)), C(1));
  }

  static SymFunc constant(int k, C c, Basis b = Basis::m) {
    SymFunc f(k, b);
    f.add(Key(static_cast<std::size_t>(k)), std::move(c));
    return f;
  }

  int k() const { return k_; }
  Basis basis() const { return basis_; }
  const std::map<Key, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && is_empty_key(terms_.begin()->first) &&
           Ops::is_one(terms_.begin()->second);
  }

  void add(const Key& key, const C& c) {
    if (static_cast<int>(key.size()) != k_)
      throw BasisMismatch("key with " + std::to_string(key.size()) + " sets in a " +
                          std::to_string(k_) + "-set function");
    if (Ops::is_zero(c)) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second = it->second + c;
      if (Ops::is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Coefficient in a given basis (converting if necessary).
  C coefficient(Basis b, const Key& key) const { return converted(b).coefficient(key); }

  SymFunc converted(Basis target) const {
    if (target == basis_) return *this;
    SymFunc p = basis_ == Basis::p ? *this : transform(Basis::p, true);
    return target == Basis::p ? p : p.transform(target, false);
  }

  SymFunc operator-() const { return scaled(-1); }

  SymFunc scaled(const Rational& s) const {
    SymFunc r(k_, basis_);
    if (s == 0) return r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, Ops::scale(c, s));
    return r;
  }

  SymFunc times_coeff(const C& s) const {
    SymFunc r(k_, basis_);
    for (const auto& [key, c] : terms_) r.add(key, s * c);
    return r;
  }

  friend SymFunc operator+(const SymFunc& a, const SymFunc& b) { return a.combine(b, 1); }
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a.combine(b, -1); }

  /// Product, carried out in power sums and returned in the basis of `a`.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    check_k(a, b);
    SymFunc pa = a.converted(Basis::p), pb = b.converted(Basis::p);
    SymFunc r(a.k_, Basis::p);
    for (const auto& [ka, ca] : pa.terms_)
      for (const auto& [kb, cb] : pb.terms_) {
        Key key(ka.size());
        for (std::size_t i = 0; i < ka.size(); ++i) key[i] = ka[i].merged(kb[i]);
        r.add(key, ca * cb);
      }
    return r.converted(a.basis_);
  }

  SymFunc& operator+=(const SymFunc& b) { return *this = *this + b; }
  SymFunc& operator-=(const SymFunc& b) { return *this = *this - b; }
  SymFunc& operator*=(const SymFunc& b) { return *this = *this * b; }

  /// psi_n: p_lambda -> p_{n lambda}, coefficients through `act`.
  template <class Action>
  SymFunc adams(int n, const Action& act) const {
    SymFunc p = converted(Basis::p);
    SymFunc r(k_, Basis::p);
    for (const auto& [key, c] : p.terms_) {
      Key scaled_key(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) scaled_key[i] = key[i].scaled(n);
      r.add(scaled_key, act(c, n));
    }
    return r.converted(basis_);
  }

  /// Tensor product f(x_1..) g(y_1..): keys are concatenated.
  friend SymFunc tensor(const SymFunc& a, const SymFunc& b) {
    SymFunc pa = a, pb = b.converted(a.basis_);
    SymFunc r(a.k_ + b.k_, a.basis_);
    for (const auto& [ka, ca] : pa.terms_)
      for (const auto& [kb, cb] : pb.terms_) {
        Key key = ka;
        key.insert(key.end(), kb.begin(), kb.end());
        r.add(key, ca * cb);
      }
    return r;
  }

  /// Apply a coefficient map (e.g. a substitution) termwise.
  template <class F>
  SymFunc map_coeffs(F&& f) const {
    SymFunc r(k_, basis_);
    for (const auto& [key, c] : terms_) r.add(key, f(c));
    return r;
  }

  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.k_ != b.k_) return false;
    SymFunc bb = b.converted(a.basis_);
    if (a.terms_.size() != bb.terms_.size()) return false;
    for (const auto& [key, c] : a.terms_) {
      auto it = bb.terms_.find(key);
      if (it == bb.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      std::string cs = Ops::render(c);
      if (cs != "1") os << "(" << cs << ")*";
      os << basis_name(basis_) << "[" << ncv::to_string(key) << "]";
    }
    return os.str();
  }

 private:
  int k_;
  Basis basis_;
  std::map<Key, C> terms_;

  static bool is_empty_key(const Key& key) {
    for (const auto& p : key)
      if (!p.empty()) return false;
    return true;
  }

  static void check_k(const SymFunc& a, const SymFunc& b) {
    if (a.k_ != b.k_)
      throw BasisMismatch(std::to_string(a.k_) + " vs " + std::to_string(b.k_) + " variable sets");
  }

  SymFunc combine(const SymFunc& b, int sign) const {
    check_k(*this, b);
    SymFunc r = *this;
    SymFunc bb = b.converted(basis_);
    for (const auto& [key, c] : bb.terms_) r.add(key, sign > 0 ? c : Ops::scale(c, -1));
    return r;
  }

  /// to_p: from this basis into p; otherwise from p into `target`.
  SymFunc transform(Basis target, bool to_p) const {
    SymFunc r(k_, to_p ? Basis::p : target);
    Basis table_basis = to_p ? basis_ : target;
    for (const auto& [key, c] : terms_) {
      std::vector<std::pair<Key, Rational>> acc{{Key{}, Rational(1)}};
      for (const auto& part : key) {
        const auto& table = to_p ? to_p_table(table_basis, part.size())
                                 : from_p_table(table_basis, part.size());
        const Expansion& e = table.at(part);
        std::vector<std::pair<Key, Rational>> next;
        for (const auto& [prefix, pc] : acc)
          for (const auto& [img, ic] : e) {
            Key nk = prefix;
            nk.push_back(img);
            next.emplace_back(std::move(nk), pc * ic);
          }
        acc = std::move(next);
      }
      for (const auto& [nk, rc] : acc) r.add(nk, Ops::scale(c, rc));
    }
    return r;
  }
};

/// Hall inner product, multiplicative over the variable sets.
template <class C>
C hall_inner(const SymFunc<C>& f, const SymFunc<C>& g) {
  if (f.k() != g.k())
    throw BasisMismatch(std::to_string(f.k()) + " vs " + std::to_string(g.k()) + " variable sets");
  auto pf = f.converted(Basis::p), pg = g.converted(Basis::p);
  C total{};
  for (const auto& [key, c] : pf.terms()) {
    auto it = pg.terms().find(key);
    if (it == pg.terms().end()) continue;
    Integer z = 1;
    for (const auto& part : key) z *= part.z();
    total = total + CoeffOps<C>::scale(c * it->second, Rational(z));
  }
  return total;
}

/// <f, h_mu>, i.e. the coefficient of m_mu in f.
template <class C>
C hall_with_h(const SymFunc<C>& f, const PartitionTuple& mu) {
  if (static_cast<int>(mu.size()) != f.k())
    throw BasisMismatch("tuple length " + std::to_string(mu.size()) + " vs " +
                        std::to_string(f.k()) + " variable sets");
  return f.coefficient(Basis::m, mu);
}

}  // namespace ncv
