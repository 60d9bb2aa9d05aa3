#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nk/algebra.hpp"

namespace nk {

// A commutative algebra handed to the homological machinery as raw data: a
// basis with weights, labels and structure constants.  The unit is basis
// element 0.  For graded algebras of infinite dimension only the slice of
// weight <= trunc is stored; every complex built from it must stay within
// that bound, which weight preservation of all our differentials guarantees.
template <class K>
struct BasisAlgebra {
  std::vector<int> weight;
  std::vector<std::string> labels;
  std::optional<int> trunc;
  std::vector<std::vector<std::vector<std::pair<int, K>>>> mult;
  std::string name;

  int dim() const { return static_cast<int>(weight.size()); }

  bool in_bounds(int i, int j) const {
    return !trunc || weight[i] + weight[j] <= *trunc;
  }

  const std::vector<std::pair<int, K>>& mul(int i, int j) const {
    if (!in_bounds(i, j))
      throw std::logic_error("BasisAlgebra::mul: product exceeds weight truncation");
    return mult[i][j];
  }

  std::vector<std::pair<int, K>> mul_sparse(const std::vector<std::pair<int, K>>& a,
                                            const std::vector<std::pair<int, K>>& b) const {
    std::map<int, K> acc;
    for (const auto& [i, c] : a)
      for (const auto& [j, d] : b)
        for (const auto& [k, e] : mul(i, j)) acc[k] += c * d * e;
    std::vector<std::pair<int, K>> out;
    for (auto& [k, c] : acc)
      if (!is_zero(c)) out.emplace_back(k, c);
    return out;
  }

  void check() const {
    if (dim() == 0) throw std::logic_error("BasisAlgebra: empty basis");
    if (weight[0] != 0) throw std::logic_error("BasisAlgebra: unit must have weight 0");
    for (int i = 0; i < dim(); ++i) {
      if (!in_bounds(0, i)) continue;
      auto v = mul(0, i);
      if (v.size() != 1 || v[0].first != i || !is_one(v[0].second))
        throw std::logic_error("BasisAlgebra: unit law fails");
    }
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        if (!in_bounds(i, j)) continue;
        // commutativity
        auto ij = mul(i, j), ji = mul(j, i);
        if (ij != ji) throw std::logic_error("BasisAlgebra: not commutative");
        for (const auto& [k, c] : ij)
          if (trunc && weight[k] != weight[i] + weight[j])
            throw std::logic_error("BasisAlgebra: product not weight-homogeneous");
      }
    // associativity on triples within bounds
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        for (int k = 0; k < dim(); ++k) {
          if (trunc && weight[i] + weight[j] + weight[k] > *trunc) continue;
          auto l = mul_sparse(mul(i, j), {{k, K(1)}});
          auto r = mul_sparse({{i, K(1)}}, mul(j, k));
          if (l != r) throw std::logic_error("BasisAlgebra: not associative");
        }
  }
};

template <class K>
BasisAlgebra<K> basis_algebra_from_quotient(const QuotientBasis<K>& Q, std::string name = "") {
  BasisAlgebra<K> B;
  B.weight = Q.weight;
  B.trunc = Q.trunc;
  B.name = std::move(name);
  for (int i = 0; i < Q.dim(); ++i) B.labels.push_back(Q.label(i));
  B.mult.assign(Q.dim(), std::vector<std::vector<std::pair<int, K>>>(Q.dim()));
  for (int i = 0; i < Q.dim(); ++i)
    for (int j = 0; j < Q.dim(); ++j)
      if (B.in_bounds(i, j)) B.mult[i][j] = Q.mult[i][j];
  return B;
}

// Coefficient extension along an injection of fields, entry by entry.
template <class K2, class K, class F>
BasisAlgebra<K2> base_change(const BasisAlgebra<K>& A, F&& embed) {
  BasisAlgebra<K2> B;
  B.weight = A.weight;
  B.labels = A.labels;
  B.trunc = A.trunc;
  B.name = A.name;
  B.mult.assign(A.dim(), std::vector<std::vector<std::pair<int, K2>>>(A.dim()));
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j)
      for (const auto& [k, c] : A.mult[i][j]) B.mult[i][j].emplace_back(k, embed(c));
  return B;
}

}  // namespace nk
