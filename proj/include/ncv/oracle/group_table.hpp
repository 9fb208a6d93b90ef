#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ncv/algebra/errors.hpp"
#include "ncv/oracle/finite_field.hpp"

namespace ncv {

inline constexpr long kGroupBudget = 20000;

/// GL_n(F_q) enumerated: elements, multiplication by index, conjugacy
/// classes, and the involution g -> transpose(g)^{-1}.
class GroupTable {
 public:
  using Matrix = std::vector<int>;  // row-major n*n field codes

  GroupTable(int n, int q, long budget = kGroupBudget) : n_(n), field_(std::make_shared<FiniteField>(q)) {
    if (n < 1) throw RangeError("n must be positive");
    long order = 1;
    long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    for (long qi = 1, i = 0; i < n; ++i, qi *= q) {
      order *= qn - qi;
      if (order > budget) throw BudgetExceeded("|GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")| > " + std::to_string(budget));
    }
    enumerate();
    if (static_cast<long>(elements_.size()) != order) throw Error("group order mismatch");
    build_inverses();
    build_classes();
  }

  int n() const { return n_; }
  const FiniteField& field() const { return *field_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Matrix& element(int i) const { return elements_[i]; }
  int identity() const { return identity_; }

  int index_of(const Matrix& m) const {
    auto code = encode(m);
    if (code >= index_.size() || index_[code] < 0) throw RangeError("matrix is not invertible");
    return index_[code];
  }

  int mul(int a, int b) const { return index_of(multiply(elements_[a], elements_[b])); }
  int inv(int a) const { return inverse_[a]; }
  /// sigma(g) = transpose(g)^{-1}.
  int sigma(int a) const { return sigma_[a]; }

  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int a) const { return class_of_[a]; }
  int class_rep(int c) const { return class_reps_[c]; }
  long class_size(int c) const { return class_sizes_[c]; }

  Matrix multiply(const Matrix& a, const Matrix& b) const {
    const FiniteField& F = *field_;
    Matrix c(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        int x = a[i * n_ + k];
        if (x == 0) continue;
        for (int j = 0; j < n_; ++j) c[i * n_ + j] = F.add(c[i * n_ + j], F.mul(x, b[k * n_ + j]));
      }
    return c;
  }

  Matrix diagonal(const std::vector<int>& entries) const {
    if (static_cast<int>(entries.size()) != n_) throw RangeError("diagonal needs n entries");
    Matrix m(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) m[i * n_ + i] = entries[i];
    return m;
  }

  std::string to_string(int a) const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      if (i) s += "; ";
      for (int j = 0; j < n_; ++j) s += (j ? " " : "") + field_->to_string(elements_[a][i * n_ + j]);
    }
    return s + "]";
  }

 private:
  std::size_t encode(const Matrix& m) const {
    std::size_t code = 0;
    for (int x : m) code = code * static_cast<std::size_t>(field_->size()) + static_cast<std::size_t>(x);
    return code;
  }

  int determinant(Matrix m) const {
    const FiniteField& F = *field_;
    int det = 1;
    for (int col = 0; col < n_; ++col) {
      int pivot = -1;
      for (int r = col; r < n_; ++r)
        if (m[r * n_ + col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      if (pivot != col) {
        for (int j = 0; j < n_; ++j) std::swap(m[pivot * n_ + j], m[col * n_ + j]);
        det = F.neg(det);
      }
      int p = m[col * n_ + col];
      det = F.mul(det, p);
      int pinv = F.inv(p);
      for (int r = col + 1; r < n_; ++r) {
        int f = F.mul(m[r * n_ + col], pinv);
        if (f == 0) continue;
        for (int j = col; j < n_; ++j) m[r * n_ + j] = F.sub(m[r * n_ + j], F.mul(f, m[col * n_ + j]));
      }
    }
    return det;
  }

  void enumerate() {
    int q = field_->size();
    std::size_t total = 1;
    for (int i = 0; i < n_ * n_; ++i) total *= static_cast<std::size_t>(q);
    index_.assign(total, -1);
    Matrix m(n_ * n_, 0);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (int i = n_ * n_ - 1; i >= 0; --i, c /= q) m[i] = static_cast<int>(c % q);
      if (determinant(m) == 0) continue;
      index_[code] = static_cast<int>(elements_.size());
      elements_.push_back(m);
    }
    Matrix id(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) id[i * n_ + i] = 1;
    identity_ = index_of(id);
  }

  Matrix inverse_matrix(const Matrix& a) const {
    const FiniteField& F = *field_;
    int w = 2 * n_;
    std::vector<int> m(n_ * w, 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) m[i * w + j] = a[i * n_ + j];
      m[i * w + n_ + i] = 1;
    }
    for (int col = 0; col < n_; ++col) {
      int pivot = col;
      while (m[pivot * w + col] == 0) ++pivot;
      for (int j = 0; j < w; ++j) std::swap(m[pivot * w + j], m[col * w + j]);
      int pinv = F.inv(m[col * w + col]);
      for (int j = 0; j < w; ++j) m[col * w + j] = F.mul(m[col * w + j], pinv);
      for (int r = 0; r < n_; ++r) {
        int f = m[r * w + col];
        if (r == col || f == 0) continue;
        for (int j = 0; j < w; ++j) m[r * w + j] = F.sub(m[r * w + j], F.mul(f, m[col * w + j]));
      }
    }
    Matrix inv(n_ * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) inv[i * n_ + j] = m[i * w + n_ + j];
    return inv;
  }

  void build_inverses() {
    int N = size();
    inverse_.resize(N);
    for (int a = 0; a < N; ++a) inverse_[a] = index_of(inverse_matrix(elements_[a]));
    sigma_.assign(N, -1);
    for (int a = 0; a < N; ++a) {
      Matrix t(n_ * n_);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[i * n_ + j] = elements_[a][j * n_ + i];
      sigma_[a] = inverse_[index_of(t)];
    }
  }

  void build_classes() {
    int N = size();
    class_of_.assign(N, -1);
    for (int x = 0; x < N; ++x) {
      if (class_of_[x] >= 0) continue;
      int c = num_classes();
      class_reps_.push_back(x);
      long count = 0;
      for (int g = 0; g < N; ++g) {
        int y = mul(mul(g, x), inverse_[g]);
        if (class_of_[y] < 0) {
          class_of_[y] = c;
          ++count;
        }
      }
      class_sizes_.push_back(count);
    }
  }

  int n_;
  std::shared_ptr<const FiniteField> field_;
  std::vector<Matrix> elements_;
  std::vector<int> index_;
  int identity_ = 0;
  std::vector<int> inverse_, sigma_, class_of_, class_reps_;
  std::vector<long> class_sizes_;
};

}  // namespace ncv
