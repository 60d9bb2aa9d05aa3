#pragma once

#include <functional>
#include <memory>

#include "nk/basis_algebra.hpp"

namespace nk {

// A[t] for an ungraded algebra A, graded by t-degree and truncated at t^J.
// Basis: a_i t^k ordered by k then i, so the unit stays at index 0.
template <class K>
std::shared_ptr<BasisAlgebra<K>> poly_extension(const BasisAlgebra<K>& A, int J,
                                                const std::string& tname = "t") {
  for (int w : A.weight)
    if (w != 0) throw std::invalid_argument("poly_extension: base algebra must be ungraded");
  auto B = std::make_shared<BasisAlgebra<K>>();
  int D = A.dim();
  B->trunc = J;
  B->name = A.name + "[" + tname + "]";
  for (int k = 0; k <= J; ++k)
    for (int i = 0; i < D; ++i) {
      B->weight.push_back(k);
      std::string lab = A.labels[i];
      if (k > 0) {
        std::string tp = (k == 1) ? tname : tname + "^" + std::to_string(k);
        lab = (lab == "1") ? tp : lab + "*" + tp;
      }
      B->labels.push_back(lab);
    }
  int n = B->dim();
  B->mult.assign(n, std::vector<std::vector<std::pair<int, K>>>(n));
  for (int k = 0; k <= J; ++k)
    for (int i = 0; i < D; ++i)
      for (int l = 0; l <= J; ++l)
        for (int j = 0; j < D; ++j) {
          if (k + l > J) continue;
          auto& out = B->mult[k * D + i][l * D + j];
          for (const auto& [m, c] : A.mult[i][j]) out.emplace_back((k + l) * D + m, c);
        }
  return B;
}

// Dimension bookkeeping for iterated polynomial extensions.  `hh(n, i)` is a
// finite table of Hodge dimensions of the base algebra; out-of-range (n, i)
// must return 0.  The recursive form applies the one-variable rule
//   NHH_n^{(i)}[j] = HH_n^{(i)} + HH_{n-1}^{(i-1)}   (each t-weight j >= 1)
// once per variable; the closed form is a binomial expression.  Agreement of
// the two is the content of the multivariable statement.
using HodgeDimFn = std::function<int(int, int)>;

inline long long binom_ll(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// N^p HH_n^{(i)} in total t-weight J, by recursion on p.
inline long long np_hh_recursive(const HodgeDimFn& hh, int p, int n, int i, int J) {
  if (p == 0) return (J == 0) ? hh(n, i) : 0;
  long long total = 0;
  for (int j = 1; j <= J; ++j)
    total += np_hh_recursive(hh, p - 1, n, i, J - j) +
             np_hh_recursive(hh, p - 1, n - 1, i - 1, J - j);
  return total;
}

// Closed form: C(J-1, p-1) * sum_j C(p, j) hh(n-j, i-j).
inline long long np_hh_closed(const HodgeDimFn& hh, int p, int n, int i, int J) {
  if (p == 0) return (J == 0) ? hh(n, i) : 0;
  long long s = 0;
  for (int j = 0; j <= p; ++j) s += binom_ll(p, j) * hh(n - j, i - j);
  return binom_ll(J - 1, p - 1) * s;
}

// N^p HC: one cyclic step NHC_n^{(i)}[j] = HH_n^{(i)}, then p-1 Hochschild
// steps on the result.
inline long long np_hc_recursive(const HodgeDimFn& hh, int p, int n, int i, int J) {
  if (p == 0) throw std::invalid_argument("np_hc_recursive: p >= 1");
  long long total = 0;
  for (int j = 1; j <= J; ++j) total += np_hh_recursive(hh, p - 1, n, i, J - j);
  return total;
}

// Closed form: C(J-1, p-1) * sum_{j<=p-1} C(p-1, j) hh(n-j, i-j).
inline long long np_hc_closed(const HodgeDimFn& hh, int p, int n, int i, int J) {
  if (p == 0) throw std::invalid_argument("np_hc_closed: p >= 1");
  long long s = 0;
  for (int j = 0; j <= p - 1; ++j) s += binom_ll(p - 1, j) * hh(n - j, i - j);
  return binom_ll(J - 1, p - 1) * s;
}

}  // namespace nk
