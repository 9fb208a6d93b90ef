#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncv/algebra/errors.hpp"
#include "ncv/algebra/rational.hpp"
#include "ncv/oracle/group_table.hpp"
#include "ncv/parallel.hpp"

namespace ncv {

enum class Twist { untwisted, twisted };

inline const char* twist_name(Twist t) { return t == Twist::untwisted ? "untwisted" : "twisted"; }

/// Integer-valued class function, one value per conjugacy class.
using ClassFunction = std::vector<Integer>;

inline constexpr int kElementLevelLimit = 500;
inline constexpr long kPairBudget = 25'000'000;

namespace detail {

inline ClassFunction collapse(const GroupTable& G, const std::vector<Integer>& per_element, const std::string& what) {
  ClassFunction f(G.num_classes());
  std::vector<bool> seen(G.num_classes(), false);
  for (int y = 0; y < G.size(); ++y) {
    int c = G.class_of(y);
    if (!seen[c]) {
      f[c] = per_element[y];
      seen[c] = true;
    } else if (f[c] != per_element[y]) {
      throw NotClassConstant(what + " differs within class of " + G.to_string(G.class_rep(c)));
    }
  }
  return f;
}

}  // namespace detail

/// eta(y) = #{a : a^2 = y} (untwisted) or #{a : a sigma(a) = y} (twisted).
inline ClassFunction eta_counts(const GroupTable& G, Twist kind) {
  std::vector<int> image(G.size());
  parallel_for(G.size(), [&](long b, long e, int) {
    for (long a = b; a < e; ++a) {
      int x = static_cast<int>(a);
      image[a] = kind == Twist::untwisted ? G.mul(x, x) : G.mul(x, G.sigma(x));
    }
  });
  std::vector<Integer> per(G.size(), 0);
  for (int y : image) per[y] += 1;
  return detail::collapse(G, per, std::string("eta (") + twist_name(kind) + ")");
}

inline ClassFunction class_indicator(const GroupTable& G, int c) {
  ClassFunction f(G.num_classes(), 0);
  f.at(c) = 1;
  return f;
}

/// Class algebra structure constants a[i][j][l] = #{(x, y) : x in C_i, y in C_j, xy = rep(C_l)}.
class ClassAlgebra {
 public:
  explicit ClassAlgebra(const GroupTable& G) : c_(G.num_classes()), a_(static_cast<std::size_t>(c_) * c_ * c_, 0) {
    parallel_for(c_, [&](long b, long e, int) {
      for (long l = b; l < e; ++l) {
        int z = G.class_rep(static_cast<int>(l));
        for (int x = 0; x < G.size(); ++x) {
          int y = G.mul(G.inv(x), z);
          ++a_[(static_cast<std::size_t>(G.class_of(x)) * c_ + G.class_of(y)) * c_ + l];
        }
      }
    });
  }

  ClassFunction convolve(const ClassFunction& f, const ClassFunction& g) const {
    ClassFunction h(c_, 0);
    for (int i = 0; i < c_; ++i) {
      if (f[i] == 0) continue;
      for (int j = 0; j < c_; ++j) {
        if (g[j] == 0) continue;
        Integer fg = f[i] * g[j];
        const long* row = &a_[(static_cast<std::size_t>(i) * c_ + j) * c_];
        for (int l = 0; l < c_; ++l)
          if (row[l]) h[l] += fg * row[l];
      }
    }
    return h;
  }

 private:
  int c_;
  std::vector<long> a_;
};

/// (f * g)(y) = sum_{ab = y} f(a) g(b); class-wise for large groups.
inline ClassFunction convolve(const GroupTable& G, const ClassFunction& f, const ClassFunction& g,
                              const ClassAlgebra* algebra = nullptr) {
  if (algebra) return algebra->convolve(f, g);
  std::vector<Integer> h(G.size(), 0);
  for (int a = 0; a < G.size(); ++a) {
    const Integer& fa = f[G.class_of(a)];
    if (fa == 0) continue;
    for (int b = 0; b < G.size(); ++b) {
      const Integer& gb = g[G.class_of(b)];
      if (gb != 0) h[G.mul(a, b)] += fa * gb;
    }
  }
  return detail::collapse(G, h, "convolution");
}

/// (eta^{*r} * 1_{C_1} * ... * 1_{C_k})(1): the number of solutions of
/// prod E(A_i) prod X_i = 1 with X_i in C_i.
inline Integer rep_count(const GroupTable& G, Twist kind, int r, const std::vector<int>& classes) {
  if (r < 1) throw RangeError("r must be positive");
  std::unique_ptr<ClassAlgebra> algebra;
  if (G.size() > kElementLevelLimit) algebra = std::make_unique<ClassAlgebra>(G);
  ClassFunction eta = eta_counts(G, kind);
  ClassFunction acc = eta;
  for (int i = 1; i < r; ++i) acc = convolve(G, acc, eta, algebra.get());
  for (int c : classes) acc = convolve(G, acc, class_indicator(G, c), algebra.get());
  return acc[G.class_of(G.identity())];
}

struct Correspondence {
  Integer count_a, count_b;
  bool equal() const { return count_a == count_b; }
};

/// #{(x,z) : x z sigma(x) z^{-1} = h} against #{(x,z) : x z x^{-1} z^{-1} = h}.
inline Correspondence correspondence_check(const GroupTable& G, int h) {
  long pairs = static_cast<long>(G.size()) * G.size();
  if (pairs > kPairBudget) throw BudgetExceeded(std::to_string(pairs) + " pairs");
  int workers = thread_count();
  std::vector<long> a(workers, 0), b(workers, 0);
  parallel_for(
      G.size(),
      [&](long begin, long end, int w) {
        for (long xl = begin; xl < end; ++xl) {
          int x = static_cast<int>(xl);
          for (int z = 0; z < G.size(); ++z) {
            int zi = G.inv(z);
            if (G.mul(G.mul(x, z), G.mul(G.sigma(x), zi)) == h) ++a[w];
            if (G.mul(G.mul(x, z), G.mul(G.inv(x), zi)) == h) ++b[w];
          }
        }
      },
      workers);
  Correspondence c{0, 0};
  for (int w = 0; w < workers; ++w) {
    c.count_a += a[w];
    c.count_b += b[w];
  }
  return c;
}

}  // namespace ncv
