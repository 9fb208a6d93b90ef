#pragma once

#include "ncv/algebra/laurent_poly.hpp"
#include "ncv/algebra/rational_function.hpp"
#include "ncv/sym/partition.hpp"

namespace ncv {

/// H_lambda(q) = prod over cells of (q^hook - 1).
inline LaurentPoly hook_polynomial(const Partition& lam, const std::string& var = "q") {
  LaurentPoly r(1);
  for (auto [i, j] : lam.cells()) r *= LaurentPoly::variable(var, lam.hook(i, j)) - 1;
  return r;
}

/// Deformed hook function with exponent r:
/// prod (z^{2a+1} - w^{2l+1})^r / ((z^{2a+2} - w^{2l})(z^{2a} - w^{2l+2})).
inline RationalFunction deformed_hook(int r, const Partition& lam) {
  if (r < 1) throw RangeError("deformed hook exponent must be positive");
  auto z = [](int e) { return LaurentPoly::variable("z", e); };
  auto w = [](int e) { return LaurentPoly::variable("w", e); };
  LaurentPoly num(1), den(1);
  for (auto [i, j] : lam.cells()) {
    int a = lam.arm(i, j), l = lam.leg(i, j);
    num *= (z(2 * a + 1) - w(2 * l + 1)).pow(static_cast<unsigned>(r));
    den *= (z(2 * a + 2) - w(2 * l)) * (z(2 * a) - w(2 * l + 2));
  }
  return RationalFunction(num, den);
}

}  // namespace ncv
