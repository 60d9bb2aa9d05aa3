#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nk/algebra.hpp"

namespace nk {

// Sparse element of a free module over a QuotientBasis: (generator, basis
// monomial) -> coefficient.
template <class K>
using ModElt = std::map<std::pair<int, int>, K>;

// Finitely presented graded module over a finitely presented algebra.  All
// computations happen in one weight at a time, where everything is a finite
// dimensional vector space.  Ungraded (Artinian) inputs live entirely in
// weight 0.
template <class K>
struct PresentedModule {
  std::shared_ptr<const QuotientBasis<K>> R;
  std::vector<int> gen_weight;
  std::vector<std::string> gen_label;
  std::vector<std::vector<std::vector<std::pair<int, K>>>> rels;  // row: one sparse entry per generator
  std::vector<int> rel_weight;

  PresentedModule(std::shared_ptr<const QuotientBasis<K>> ring, std::vector<int> gw,
                  std::vector<std::string> gl,
                  std::vector<std::vector<std::vector<std::pair<int, K>>>> relations)
      : R(std::move(ring)), gen_weight(std::move(gw)), gen_label(std::move(gl)),
        rels(std::move(relations)) {
    if (gen_label.size() != gen_weight.size())
      throw std::invalid_argument("PresentedModule: label/weight mismatch");
    for (const auto& row : rels) {
      if (row.size() != gen_weight.size())
        throw std::invalid_argument("PresentedModule: relation arity mismatch");
      int w = -1;
      for (size_t k = 0; k < row.size(); ++k)
        for (const auto& [b, c] : row[k]) {
          if (is_zero(c)) continue;
          int wb = R->weight[b] + gen_weight[k];
          if (w == -1) w = wb;
          if (w != wb)
            throw std::invalid_argument("PresentedModule: relation not weight-homogeneous");
        }
      rel_weight.push_back(w);  // -1 marks a zero row, skipped later
    }
  }

  int ngens() const { return static_cast<int>(gen_weight.size()); }

  struct WSpace {
    int w = 0;
    std::vector<std::pair<int, int>> ambient;       // (generator, ring basis index)
    std::map<std::pair<int, int>, int> aindex;
    Subquotient<K> sq;
    int dim() const { return sq.dim(); }
  };

  const WSpace& space(int w) const {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    if (R->trunc && w > *R->trunc)
      throw std::invalid_argument("PresentedModule::space: weight beyond ring truncation");
    WSpace s;
    s.w = w;
    for (int k = 0; k < ngens(); ++k)
      for (int b = 0; b < R->dim(); ++b)
        if (gen_weight[k] + R->weight[b] == w) {
          s.aindex[{k, b}] = static_cast<int>(s.ambient.size());
          s.ambient.emplace_back(k, b);
        }
    int n = static_cast<int>(s.ambient.size());
    std::vector<std::vector<K>> boundaries;
    for (size_t r = 0; r < rels.size(); ++r) {
      if (rel_weight[r] < 0 || rel_weight[r] > w) continue;
      for (int m = 0; m < R->dim(); ++m) {
        if (R->weight[m] != w - rel_weight[r]) continue;
        std::vector<K> v(n, K(0));
        for (int k = 0; k < ngens(); ++k)
          for (const auto& [b, c] : rels[r][k])
            for (const auto& [b2, c2] : R->mul(m, b)) v[s.aindex.at({k, b2})] += c * c2;
        boundaries.push_back(std::move(v));
      }
    }
    std::vector<std::vector<K>> cycles;
    for (int j = 0; j < n; ++j) {
      std::vector<K> e(n, K(0));
      e[j] = K(1);
      cycles.push_back(std::move(e));
    }
    s.sq = Subquotient<K>(n, boundaries, cycles);
    return cache_.emplace(w, std::move(s)).first->second;
  }

  std::vector<K> ambient_vec(const WSpace& s, const ModElt<K>& x) const {
    std::vector<K> v(s.ambient.size(), K(0));
    for (const auto& [kb, c] : x) {
      auto it = s.aindex.find(kb);
      if (it == s.aindex.end()) {
        if (!is_zero(c)) throw std::invalid_argument("ambient_vec: element not of this weight");
        continue;
      }
      v[it->second] += c;
    }
    return v;
  }

  std::vector<K> coords(int w, const ModElt<K>& x) const {
    const WSpace& s = space(w);
    return s.sq.coords(ambient_vec(s, x));
  }

  int dim(int w) const { return space(w).dim(); }

  std::string describe(const std::pair<int, int>& kb) const {
    return R->label(kb.second) + "*" + gen_label[kb.first];
  }

 private:
  mutable std::map<int, WSpace> cache_;
};

// Matrix of a linear map between weight slices of two modules over the same
// ring.  `fn` sends an ambient coordinate (generator, basis monomial) of the
// source to an element of the target; it must descend to the quotients, which
// the surrounding code checks by other means (d^2 = 0, naturality tests).
template <class K, class F>
Mat<K> transport(const PresentedModule<K>& M, int wsrc, const PresentedModule<K>& N, int wdst,
                 F&& fn) {
  const auto& S = M.space(wsrc);
  const auto& T = N.space(wdst);
  Mat<K> out(T.dim(), S.dim());
  for (int j = 0; j < S.dim(); ++j) {
    const std::vector<K>& rep = S.sq.rep(j);
    std::map<std::pair<int, int>, K> img;
    for (size_t a = 0; a < S.ambient.size(); ++a) {
      if (is_zero(rep[a])) continue;
      ModElt<K> piece = fn(S.ambient[a]);
      for (const auto& [kb, c] : piece) img[kb] += rep[a] * c;
    }
    ModElt<K> sparse;
    for (auto& [kb, c] : img)
      if (!is_zero(c)) sparse.emplace(kb, c);
    std::vector<K> y = T.sq.coords(N.ambient_vec(T, sparse));
    for (int i = 0; i < T.dim(); ++i) out.at(i, j) = y[i];
  }
  return out;
}

// Multiplication by a ring element s (sparse, homogeneous of weight ws) as a
// map M_w -> M_{w+ws}.
template <class K>
Mat<K> mult_map(const PresentedModule<K>& M, int w, const std::vector<std::pair<int, K>>& s,
                int ws) {
  return transport(M, w, M, w + ws, [&](std::pair<int, int> kb) {
    ModElt<K> out;
    for (const auto& [i, c] : s)
      for (const auto& [b2, c2] : M.R->mul(i, kb.second)) out[{kb.first, b2}] += c * c2;
    return out;
  });
}

// Dimension of the s-power torsion of M in weight w: the union of
// ker(s^j : M_w -> M_{w+j*ws}).  Stops when the kernel stabilizes twice.
template <class K>
int saturation_torsion_dim(const PresentedModule<K>& M, int w,
                           const std::vector<std::pair<int, K>>& s, int ws, int jmax = 64) {
  if (ws <= 0) throw std::invalid_argument("saturation_torsion_dim: need positive weight");
  int prev = -1, stable = 0;
  Mat<K> acc;  // s^j as a map from weight w
  for (int j = 1; j <= jmax; ++j) {
    Mat<K> step = mult_map(M, w + (j - 1) * ws, s, ws);
    acc = (j == 1) ? step : step * acc;
    if (M.R->trunc && w + j * ws > *M.R->trunc)
      throw std::runtime_error("saturation_torsion_dim: ring truncation too small");
    int k = acc.cols - acc.rank();
    if (k == prev) {
      if (++stable >= 2) return k;
    } else {
      stable = 0;
      prev = k;
    }
  }
  throw std::runtime_error("saturation_torsion_dim: kernel did not stabilize");
}

}  // namespace nk
