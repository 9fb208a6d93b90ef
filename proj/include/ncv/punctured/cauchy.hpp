#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "ncv/algebra/series.hpp"
#include "ncv/algebra/substitute.hpp"
#include "ncv/plethysm/log_exp.hpp"
#include "ncv/sym/hooks.hpp"
#include "ncv/sym/macdonald.hpp"
#include "ncv/sym/symfunc.hpp"

namespace ncv {

using SymRF = SymFunc<RationalFunction>;
using SymSeries = TruncatedSeries<SymRF>;

/// Default degree bound for k variable sets; monomial supports grow as p(n)^k.
inline int default_punctured_bound(int k) { return k <= 2 ? 4 : 3; }

/// H~_lambda(x; z^2, w^2) in the power-sum basis.
inline const SymRF& macdonald_zw(const Partition& lam) {
  static std::shared_mutex mu;
  static std::map<Partition, SymRF> memo;
  {
    std::shared_lock lock(mu);
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
  }
  SubstitutionMap sub{{"q", LaurentPoly::variable("z", 2)}, {"t", LaurentPoly::variable("w", 2)}};
  SymRF value = macdonald_modified(lam)
                    .map_coeffs([&](const RationalFunction& c) { return substitute(c, sub); })
                    .converted(Basis::p);
  std::unique_lock lock(mu);
  return memo.try_emplace(lam, std::move(value)).first->second;
}

/// Omega_{r,k}(z,w) = sum_lambda H_{r,lambda}(z,w) prod_i H~_lambda(x_i; z^2, w^2),
/// graded by |lambda|, in the power-sum basis.
inline SymSeries cauchy_omega(int r, int k, int N) {
  if (r < 1 || k < 1) throw RangeError("cauchy_omega needs r >= 1 and k >= 1");
  if (N > kMacdonaldBound)
    throw BoundExceeded("degree " + std::to_string(N) + " > " + std::to_string(kMacdonaldBound));
  SymRF zero(k, Basis::p);
  SymSeries omega(N, zero);
  omega.set(0, SymRF::one_like(zero));
  for (int n = 1; n <= N; ++n) {
    SymRF slice(k, Basis::p);
    for (const auto& lam : partitions_of(n)) {
      const SymRF& h = macdonald_zw(lam);
      SymRF prod = h;
      for (int i = 1; i < k; ++i) prod = tensor(prod, h);
      slice += prod.times_coeff(deformed_hook(r, lam));
    }
    omega.set(n, std::move(slice));
  }
  return omega;
}

/// Log Omega_{r,k} to at least degree N (memoized).
inline const SymSeries& log_omega(int r, int k, int N) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SymSeries> memo;
  std::lock_guard lock(mu);
  auto key = std::make_pair(r, k);
  auto it = memo.find(key);
  if (it == memo.end() || it->second.cutoff() < N)
    it = memo.insert_or_assign(key, pleth_log(cauchy_omega(r, k, N))).first;
  return it->second;
}

}  // namespace ncv
