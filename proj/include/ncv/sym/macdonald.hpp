#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "ncv/algebra/laurent_poly.hpp"
#include "ncv/algebra/rational_function.hpp"
#include "ncv/sym/partition.hpp"
#include "ncv/sym/symfunc.hpp"

namespace ncv {

inline constexpr int kMacdonaldBound = 6;

namespace detail {

struct FillingShape {
  std::vector<std::pair<int, int>> cells;               // in reading order
  std::vector<std::pair<int, int>> attacking;           // index pairs (earlier, later)
  std::vector<std::pair<int, int>> descent_candidates;  // (upper, lower) index pairs
  std::vector<int> arm, leg;
};

inline FillingShape filling_shape(const Partition& lam) {
  FillingShape s;
  for (int i = lam.length() - 1; i >= 0; --i)
    for (int j = 0; j < lam[i]; ++j) s.cells.emplace_back(i, j);
  std::map<std::pair<int, int>, int> index;
  for (std::size_t c = 0; c < s.cells.size(); ++c) index[s.cells[c]] = static_cast<int>(c);
  for (std::size_t a = 0; a < s.cells.size(); ++a) {
    auto [ia, ja] = s.cells[a];
    s.arm.push_back(lam.arm(ia, ja));
    s.leg.push_back(lam.leg(ia, ja));
    if (ia >= 1) s.descent_candidates.emplace_back(static_cast<int>(a), index.at({ia - 1, ja}));
    for (std::size_t b = a + 1; b < s.cells.size(); ++b) {
      auto [ib, jb] = s.cells[b];
      if (ia == ib || (ia == ib + 1 && ja > jb))
        s.attacking.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return s;
}

inline SymFunc<RationalFunction> compute_macdonald(const Partition& lam) {
  FillingShape shape = filling_shape(lam);
  SymFunc<RationalFunction> result(1, Basis::m);
  for (const auto& mu : partitions_of(lam.size())) {
    std::vector<int> values;
    for (int i = 0; i < mu.length(); ++i) values.insert(values.end(), mu[i], i + 1);
    std::map<std::pair<int, int>, long> weights;
    do {
      int inv = 0, maj = 0;
      for (auto [a, b] : shape.attacking)
        if (values[a] > values[b]) ++inv;
      for (auto [up, down] : shape.descent_candidates)
        if (values[up] > values[down]) {
          inv -= shape.arm[up];
          maj += shape.leg[up] + 1;
        }
      ++weights[{inv, maj}];
    } while (std::next_permutation(values.begin(), values.end()));
    std::vector<LaurentPoly::Term> terms;
    for (auto [im, count] : weights) {
      LaurentPoly::Term t;
      t.exps[0] = im.second;  // t
      t.exps[1] = im.first;   // q
      t.coeff = count;
      terms.push_back(std::move(t));
    }
    result.add({mu}, RationalFunction(LaurentPoly::from_terms({"t", "q"}, std::move(terms))));
  }
  return result;
}

}  // namespace detail

/// Modified Macdonald polynomial in the monomial basis, coefficients in q, t,
/// from the combinatorial formula sum_sigma q^inv t^maj x^sigma.
inline const SymFunc<RationalFunction>& macdonald_modified(const Partition& lam,
                                                            int bound = kMacdonaldBound) {
  if (lam.size() > bound)
    throw BoundExceeded("|lambda| = " + std::to_string(lam.size()) + " > " + std::to_string(bound));
  static std::shared_mutex mu;
  static std::map<Partition, SymFunc<RationalFunction>> memo;
  {
    std::shared_lock lock(mu);
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
  }
  auto value = detail::compute_macdonald(lam);
  std::unique_lock lock(mu);
  return memo.try_emplace(lam, std::move(value)).first->second;
}

}  // namespace ncv
