#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "nk/basis_algebra.hpp"
#include "nk/chain.hpp"
#include "nk/eulerian.hpp"
#include "nk/matrix.hpp"

namespace nk {

// Normalized Hochschild complex of a BasisAlgebra in one fixed weight w:
// degree m chains are tuples (a_0 | a_1, ..., a_m) of basis elements with the
// interior entries non-unit and total weight w.  Ungraded algebras live
// entirely in w = 0.  The Connes operator is the normalized one: it vanishes
// on tuples whose zeroth entry is the unit.
template <class K>
struct HochschildComplex {
  std::shared_ptr<const BasisAlgebra<K>> A;
  int w = 0;
  int top = 0;
  std::vector<std::vector<std::vector<int>>> tuples;      // [m] -> basis tuples
  std::vector<std::map<std::vector<int>, int>> tindex;    // [m] -> tuple -> column
  std::vector<Mat<K>> b;  // b[m]: C_m -> C_{m-1}, m >= 1
  std::vector<Mat<K>> B;  // B[m]: C_m -> C_{m+1}, m <= top-1

  HochschildComplex(std::shared_ptr<const BasisAlgebra<K>> alg, int weight, int topdeg,
                    size_t cap = 2000000)
      : A(std::move(alg)), w(weight), top(topdeg) {
    if (A->trunc && w > *A->trunc)
      throw std::invalid_argument("HochschildComplex: weight beyond algebra truncation");
    tuples.resize(top + 1);
    tindex.resize(top + 1);
    for (int m = 0; m <= top; ++m) {
      enumerate(m, cap);
      for (size_t i = 0; i < tuples[m].size(); ++i)
        tindex[m].emplace(tuples[m][i], static_cast<int>(i));
    }
    b.resize(top + 1);
    B.resize(top + 1);
    for (int m = 1; m <= top; ++m) b[m] = build_b(m);
    for (int m = 0; m < top; ++m) B[m] = build_B(m);
  }

  int dim(int m) const { return static_cast<int>(tuples[m].size()); }

  // dim HH_m at weight w; needs the complex built one degree beyond m.
  int hh_dim(int m) const {
    if (m < 0 || m >= top) throw std::invalid_argument("hh_dim: need m < top");
    int kd = (m == 0) ? dim(0) : dim(m) - b[m].rank();
    return kd - b[m + 1].rank();
  }

  Subquotient<K> hh_basis(int m) const {
    ChainComplex<K> C = as_chain();
    return C.homology_basis(m);
  }

  ChainComplex<K> as_chain() const {
    ChainComplex<K> C;
    for (int m = 0; m <= top; ++m) {
      C.dims.push_back(dim(m));
      C.d.push_back(m == 0 ? Mat<K>(0, 0) : b[m]);
    }
    return C;
  }

  // Action of a group algebra element on C_m: permutations move interior
  // entries (left action) and carry their sign.
  Mat<K> chain_action(const SymmetricGroup& G, const GroupAlgElt& x, int m) const {
    if (G.n != m) throw std::invalid_argument("chain_action: group size mismatch");
    Mat<K> M(dim(m), dim(m));
    for (int s = 0; s < G.size(); ++s) {
      if (is_zero(x.c[s])) continue;
      const auto& pinv = G.elems[G.inverse(s)];
      K coef(x.c[s]);
      if (G.sign(s) < 0) coef = -coef;
      for (int j = 0; j < dim(m); ++j) {
        const auto& T = tuples[m][j];
        std::vector<int> T2(T.size());
        T2[0] = T[0];
        for (int q = 0; q < m; ++q) T2[q + 1] = T[pinv[q] + 1];
        M.at(tindex[m].at(T2), j) += coef;
      }
    }
    return M;
  }

  // Hodge projector e^{(i)} acting on C_m.
  Mat<K> hodge_projector(int m, int i) const {
    if (i < 0 || i > m) return Mat<K>(dim(m), dim(m));
    SymmetricGroup G(m);
    auto e = eulerian_idempotents(G);
    return chain_action(G, e[i], m);
  }

  // dim HH_m^{(i)} at weight w via ranks: the projector commutes with b, so
  // the complex splits and dim = rank E_m - rank(b E_m) - rank(b E_{m+1}).
  int hh_hodge_dim(int m, int i) const {
    if (m < 0 || m >= top) throw std::invalid_argument("hh_hodge_dim: need m < top");
    if (i < 0 || i > m) return 0;
    Mat<K> Em = hodge_projector(m, i);
    int re = Em.rank();
    int rb = (m == 0) ? 0 : (b[m] * Em).rank();
    Mat<K> Em1 = hodge_projector(m + 1, i);
    int rb1 = (b[m + 1] * Em1).rank();
    return re - rb - rb1;
  }

 private:
  void enumerate(int m, size_t cap) {
    std::vector<int> cur(m + 1);
    auto& out = tuples[m];
    // position 0: any basis index; positions >= 1: non-unit
    std::function<void(int, int)> rec = [&](int pos, int wleft) {
      if (pos == m + 1) {
        if (wleft == 0) {
          out.push_back(cur);
          if (out.size() > cap)
            throw std::runtime_error("HochschildComplex: chain cap exceeded");
        }
        return;
      }
      int start = (pos == 0) ? 0 : 1;
      for (int a = start; a < A->dim(); ++a) {
        if (A->weight[a] > wleft) continue;
        cur[pos] = a;
        rec(pos + 1, wleft - A->weight[a]);
      }
    };
    rec(0, w);
  }

  Mat<K> build_b(int m) {
    Mat<K> M(dim(m - 1), dim(m));
    for (int j = 0; j < dim(m); ++j) {
      const auto& T = tuples[m][j];
      // faces 0..m-1 multiply adjacent entries; the wrap face multiplies the
      // last entry into the zeroth slot
      for (int f = 0; f <= m; ++f) {
        K sgn = (f % 2) ? K(-1) : K(1);
        int li = (f == m) ? T[m] : T[f];
        int ri = (f == m) ? T[0] : T[f + 1];
        for (const auto& [k, c] : A->mul(li, ri)) {
          if (f >= 1 && f < m && k == 0) continue;  // degenerate: unit inside
          std::vector<int> T2;
          T2.reserve(m);
          if (f == m) {
            T2.push_back(k);
            for (int p = 1; p <= m - 1; ++p) T2.push_back(T[p]);
          } else {
            for (int p = 0; p < f; ++p) T2.push_back(T[p]);
            T2.push_back(k);
            for (int p = f + 2; p <= m; ++p) T2.push_back(T[p]);
          }
          M.at(tindex[m - 1].at(T2), j) += sgn * c;
        }
      }
    }
    return M;
  }

  Mat<K> build_B(int m) {
    Mat<K> M(dim(m + 1), dim(m));
    for (int j = 0; j < dim(m); ++j) {
      const auto& T = tuples[m][j];
      if (T[0] == 0) continue;  // every rotation lands the unit inside
      for (int i = 0; i <= m; ++i) {
        K sgn = ((i * m) % 2) ? K(-1) : K(1);
        std::vector<int> T2;
        T2.reserve(m + 2);
        T2.push_back(0);
        for (int p = i; p <= m; ++p) T2.push_back(T[p]);
        for (int p = 0; p < i; ++p) T2.push_back(T[p]);
        M.at(tindex[m + 1].at(T2), j) += sgn;
      }
    }
    return M;
  }
};

// Convenience: HH dims in one weight for m = 0..nmax (complex built to
// nmax+1 so every reported degree is certified).
template <class K>
std::vector<int> hochschild_dims(std::shared_ptr<const BasisAlgebra<K>> A, int w, int nmax) {
  HochschildComplex<K> C(A, w, nmax + 1);
  std::vector<int> out;
  for (int m = 0; m <= nmax; ++m) out.push_back(C.hh_dim(m));
  return out;
}

// Chain map on normalized complexes induced by a weight-preserving algebra
// map, given by sparse images of basis elements.  Terms that become
// degenerate (unit in the interior) vanish in the target.
template <class K>
Mat<K> induced_chain_map(const HochschildComplex<K>& src, const HochschildComplex<K>& dst,
                         const std::vector<std::vector<std::pair<int, K>>>& img, int m) {
  Mat<K> M(dst.dim(m), src.dim(m));
  for (int j = 0; j < src.dim(m); ++j) {
    const auto& T = src.tuples[m][j];
    std::vector<int> cur(m + 1);
    std::function<void(int, K)> rec = [&](int pos, K coef) {
      if (pos == m + 1) {
        M.at(dst.tindex[m].at(cur), j) += coef;
        return;
      }
      for (const auto& [k, c] : img[T[pos]]) {
        if (pos >= 1 && k == 0) continue;
        cur[pos] = k;
        rec(pos + 1, coef * c);
      }
    };
    rec(0, K(1));
  }
  return M;
}

// Homology of the degreewise kernel of an induced chain map (the relative
// Hochschild complex of a surjection).
template <class K>
std::vector<int> relative_hh_dims(const HochschildComplex<K>& src,
                                  const HochschildComplex<K>& dst,
                                  const std::vector<std::vector<std::pair<int, K>>>& img,
                                  int nmax) {
  if (nmax + 1 > src.top) throw std::invalid_argument("relative_hh_dims: complex too short");
  ChainComplex<K> Krel;
  std::vector<Mat<K>> kbasis;  // columns span ker(pi_m)
  for (int m = 0; m <= nmax + 1; ++m) {
    Mat<K> pi = induced_chain_map(src, dst, img, m);
    auto kb = pi.kernel_basis();
    kbasis.push_back(Mat<K>::from_cols(src.dim(m), kb));
    Krel.dims.push_back(static_cast<int>(kb.size()));
  }
  Krel.d.push_back(Mat<K>(0, 0));
  for (int m = 1; m <= nmax + 1; ++m) {
    // b restricted to kernels: solve b * K_m = K_{m-1} * X
    Mat<K> bk = src.b[m] * kbasis[m];
    LinSolver<K> S(kbasis[m - 1]);
    Krel.d.push_back(S.solve_many(bk));
  }
  Krel.validate();
  std::vector<int> out;
  for (int m = 0; m <= nmax; ++m) out.push_back(Krel.homology_dim(m));
  return out;
}

}  // namespace nk
