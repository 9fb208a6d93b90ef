#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncv/algebra/errors.hpp"
#include "ncv/algebra/rational.hpp"

namespace ncv {

inline constexpr int kPartitionBound = 12;

/// Integer partition, parts weakly decreasing. Cells (i, j) are 0-based with
/// row i of length parts[i]; row 0 is the longest (bottom row in French).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw RangeError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw RangeError("partition parts must be weakly decreasing");
    }
  }

  /// Sorts arbitrary positive parts into a partition.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
  }

  /// n(lambda) = sum (i-1) lambda_i.
  int n() const {
    int s = 0;
    for (int i = 0; i < length(); ++i) s += i * parts_[i];
    return s;
  }

  /// <lambda, lambda> = sum of squared conjugate parts.
  int self_pairing() const {
    int s = 0;
    for (int c : conjugate().parts_) s += c * c;
    return s;
  }

  int arm(int i, int j) const { return parts_[i] - j - 1; }
  int leg(int i, int j) const { return conjugate_part(j) - i - 1; }
  int hook(int i, int j) const { return arm(i, j) + leg(i, j) + 1; }

  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> c;
    for (int i = 0; i < length(); ++i)
      for (int j = 0; j < parts_[i]; ++j) c.emplace_back(i, j);
    return c;
  }

  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  /// z_lambda = prod_i i^{m_i} m_i!.
  Integer z() const {
    Integer r = 1;
    for (auto [part, mult] : multiplicities()) {
      r *= ipow(Integer(part), static_cast<unsigned long>(mult));
      for (int k = 2; k <= mult; ++k) r *= k;
    }
    return r;
  }

  /// Every part multiplied by k.
  Partition scaled(int k) const {
    std::vector<int> p = parts_;
    for (auto& x : p) x *= k;
    return Partition(std::move(p));
  }

  /// Multiset union of parts.
  Partition merged(const Partition& o) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), o.parts_.begin(), o.parts_.end());
    return from_unsorted(std::move(p));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
  }

  /// Parses "2,1,1"; the empty string and "0" give the empty partition.
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
      token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
      token.erase(std::remove(token.begin(), token.end(), '('), token.end());
      token.erase(std::remove(token.begin(), token.end(), ')'), token.end());
      if (token.empty()) continue;
      try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw ParseError("bad partition part '" + token + "'");
        if (v < 0) throw ParseError("negative part in '" + text + "'");
        if (v > 0) parts.push_back(v);
      } catch (const std::logic_error&) {
        throw ParseError("bad partition part '" + token + "'");
      }
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i] > parts[i - 1]) throw ParseError("parts of '" + text + "' are not weakly decreasing");
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;

  int conjugate_part(int j) const {
    int c = 0;
    for (int p : parts_)
      if (p > j) ++c;
    return c;
  }
};

using PartitionTuple = std::vector<Partition>;

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n, int bound = kPartitionBound) {
  if (n < 0) throw RangeError("negative size");
  if (n > bound)
    throw BoundExceeded("partitions of " + std::to_string(n) + " exceed bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline std::string to_string(const PartitionTuple& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) s += "|";
    const auto& p = mu[i].parts();
    for (std::size_t j = 0; j < p.size(); ++j) s += (j ? "," : "") + std::to_string(p[j]);
  }
  return s;
}

/// Parses the "2,1|3" syntax; every component must have the same size.
inline PartitionTuple parse_partition_tuple(const std::string& text) {
  PartitionTuple mu;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, '|')) mu.push_back(Partition::parse(part));
  if (text.empty() || mu.empty()) throw ParseError("empty partition tuple");
  for (const auto& p : mu)
    if (p.size() != mu[0].size())
      throw ParseError("components of '" + text + "' have different sizes");
  return mu;
}

inline int tuple_size(const PartitionTuple& mu) { return mu.empty() ? 0 : mu[0].size(); }

}  // namespace ncv
