#pragma once

#include <string>
#include <vector>

#include "ncv/nonorient/qseries.hpp"
#include "ncv/nonorient/zseries.hpp"
#include "ncv/oracle/counts.hpp"
#include "ncv/oracle/group_table.hpp"
#include "ncv/punctured/class_spec.hpp"
#include "ncv/punctured/hh.hpp"

namespace ncv {

/// A brute-force count set against the formula value times |G|.
struct OracleComparison {
  Integer count;
  Integer group_order;
  Rational e_count;  // formula value of count / |G|
  bool equal() const { return Rational(count) == e_count * Rational(group_order); }
};

/// #{(A_1..A_r) : A_1^2 ... A_r^2 = 1} against e_count_nonorient(r-2, n) at q.
inline OracleComparison nonorient_oracle(int n, int q, int r, long budget = kGroupBudget) {
  GroupTable G(n, q, budget);
  OracleComparison c;
  c.count = rep_count(G, Twist::untwisted, r, {});
  c.group_order = G.size();
  c.e_count = e_count_nonorient(r - 2, n).evaluate_at("q", q).constant_value();
  return c;
}

/// Semisimple classes over F_q given by eigenvalue codes.
using FieldClassSpec = ClassSpec<int>;

inline FieldClassSpec class_spec_from_eigenvalues(const std::vector<std::vector<int>>& eigenvalues) {
  FieldClassSpec spec;
  for (const auto& cls : eigenvalues) {
    std::vector<std::pair<int, int>> c;
    for (int e : cls) c.emplace_back(e, 1);
    spec.classes.push_back(std::move(c));
  }
  return spec;
}

inline Genericity<int> field_genericity(const FiniteField& F, const FieldClassSpec& spec) {
  return is_generic(spec, [&](int a, int b) { return F.mul(a, b); }, 1);
}

/// Index of the class of diag(eigenvalues) in G.
inline int diagonal_class(const GroupTable& G, const std::vector<std::pair<int, int>>& cls) {
  std::vector<int> diag;
  for (const auto& [e, m] : cls) {
    if (e == 0) throw RangeError("eigenvalue 0 is not invertible");
    diag.insert(diag.end(), m, e);
  }
  return G.class_of(G.index_of(G.diagonal(diag)));
}

/// #{(A, X) : prod A_i sigma(A_i) prod X_j = 1, X_j in C_j} against e_count_punctured.
inline OracleComparison punctured_oracle(int r, int q, const FieldClassSpec& spec, long budget = kGroupBudget) {
  int n = spec.n();
  GroupTable G(n, q, budget);
  auto g = field_genericity(G.field(), spec);
  if (!g.generic) throw RangeError("class spec is not generic: " + g.reason);
  std::vector<int> classes;
  for (const auto& cls : spec.classes) classes.push_back(diagonal_class(G, cls));
  OracleComparison c;
  c.count = rep_count(G, Twist::twisted, r, classes);
  c.group_order = G.size();
  c.e_count = e_count_punctured(r, spec.k(), spec.mu()).evaluate_at("q", q).constant_value();
  return c;
}

}  // namespace ncv
