#pragma once

#include <memory>
#include <vector>

#include "nk/basis_algebra.hpp"
#include "nk/hochschild.hpp"
#include "nk/ratfun.hpp"

namespace nk {

// Coefficient extension Q -> Q(u) of a basis-presented algebra.
inline std::shared_ptr<BasisAlgebra<RatFun>> to_rational_functions(const BasisAlgebra<Rat>& A) {
  auto B = base_change<RatFun>(A, [](const Rat& c) { return RatFun(c); });
  B.name = A.name + " over Q(u)";
  return std::make_shared<BasisAlgebra<RatFun>>(std::move(B));
}

// Hochschild homology relative to Q of an algebra that lives over the
// one-variable function field: the ground field contributes one extra
// derivation, so each degree picks up the previous one,
//   dim HH_n(A/Q) = dim HH_n(A/F) + dim HH_{n-1}(A/F)   (dims over F).
inline std::vector<int> ground_field_shift(const std::vector<int>& hhF) {
  std::vector<int> out(hhF.size());
  for (size_t n = 0; n < hhF.size(); ++n)
    out[n] = hhF[n] + (n >= 1 ? hhF[n - 1] : 0);
  return out;
}

}  // namespace nk
