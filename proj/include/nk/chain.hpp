#pragma once

#include <vector>

#include "nk/matrix.hpp"

namespace nk {

// A finite strand C_0 <- C_1 <- ... <- C_top of a chain complex.  d[m] maps
// C_m to C_{m-1}; d[0] is unused.  Homology at the top degree is only correct
// if the caller knows C_{top+1} contributes nothing (we always build one
// degree beyond what we report).
template <class K>
struct ChainComplex {
  std::vector<int> dims;
  std::vector<Mat<K>> d;

  int top() const { return static_cast<int>(dims.size()) - 1; }

  void validate() const {
    if (d.size() != dims.size()) throw std::logic_error("ChainComplex: differential count");
    for (int m = 1; m <= top(); ++m) {
      if (d[m].rows != dims[m - 1] || d[m].cols != dims[m])
        throw std::logic_error("ChainComplex: differential shape at degree " +
                               std::to_string(m));
      if (m >= 2 && !(d[m - 1] * d[m]).is_zero_mat())
        throw std::logic_error("ChainComplex: d^2 != 0 at degree " + std::to_string(m));
    }
  }

  // dim H_m = dim ker d_m - rank d_{m+1}; requires m < top.
  int homology_dim(int m) const {
    if (m < 0 || m >= top())
      throw std::invalid_argument("homology_dim: degree out of certified range");
    int kd = (m == 0) ? dims[0] : dims[m] - d[m].rank();
    return kd - d[m + 1].rank();
  }

  // Homology with explicit cycle representatives and coordinates.
  Subquotient<K> homology_basis(int m) const {
    if (m < 0 || m >= top())
      throw std::invalid_argument("homology_basis: degree out of certified range");
    std::vector<std::vector<K>> cycles;
    if (m == 0) {
      for (int j = 0; j < dims[0]; ++j) {
        std::vector<K> e(dims[0], K(0));
        e[j] = K(1);
        cycles.push_back(e);
      }
    } else {
      cycles = d[m].kernel_basis();
    }
    std::vector<std::vector<K>> boundaries;
    for (int j = 0; j < dims[m + 1]; ++j) boundaries.push_back(d[m + 1].col(j));
    return Subquotient<K>(dims[m], boundaries, cycles);
  }
};

}  // namespace nk
