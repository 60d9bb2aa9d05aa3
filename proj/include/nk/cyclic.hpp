#pragma once

#include <memory>
#include <vector>

#include "nk/hochschild.hpp"

namespace nk {

// Cyclic homology through the (b, B)-bicomplex: Tot_n = sum over q >= 0 of
// C_{n-2q}, differential D = b (within a column) + B (one column down).
template <class K>
struct CyclicComplex {
  std::shared_ptr<const HochschildComplex<K>> H;
  int top = 0;

  struct Layout {
    std::vector<int> offset;  // per column q
    std::vector<int> cdeg;    // chain degree n - 2q
    int dim = 0;
  };
  std::vector<Layout> tot;
  std::vector<Mat<K>> D;  // D[n]: Tot_n -> Tot_{n-1}

  CyclicComplex(std::shared_ptr<const HochschildComplex<K>> h, int topdeg)
      : H(std::move(h)), top(topdeg) {
    if (top > H->top)
      throw std::invalid_argument("CyclicComplex: underlying complex too short");
    tot.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
      auto& L = tot[n];
      for (int q = 0; n - 2 * q >= 0; ++q) {
        L.offset.push_back(L.dim);
        L.cdeg.push_back(n - 2 * q);
        L.dim += H->dim(n - 2 * q);
      }
    }
    D.resize(top + 1);
    for (int n = 1; n <= top; ++n) {
      Mat<K> M(tot[n - 1].dim, tot[n].dim);
      for (size_t q = 0; q < tot[n].cdeg.size(); ++q) {
        int m = tot[n].cdeg[q];
        // b block: column q of Tot_{n-1} has chain degree m - 1
        if (m >= 1) place_block(M, tot[n - 1].offset[q], tot[n].offset[q], H->b[m]);
        // B block: column q-1 of Tot_{n-1} has chain degree m + 1
        if (q >= 1) place_block(M, tot[n - 1].offset[q - 1], tot[n].offset[q], H->B[m]);
      }
      D[n] = std::move(M);
    }
  }

  int hc_dim(int n) const {
    if (n < 0 || n >= top) throw std::invalid_argument("hc_dim: need n < top");
    int kd = (n == 0) ? tot[0].dim : tot[n].dim - D[n].rank();
    return kd - D[n + 1].rank();
  }

  Subquotient<K> hc_basis(int n) const {
    if (n < 0 || n >= top) throw std::invalid_argument("hc_basis: need n < top");
    std::vector<std::vector<K>> cycles;
    if (n == 0) {
      for (int j = 0; j < tot[0].dim; ++j) {
        std::vector<K> e(tot[0].dim, K(0));
        e[j] = K(1);
        cycles.push_back(std::move(e));
      }
    } else {
      cycles = D[n].kernel_basis();
    }
    std::vector<std::vector<K>> boundaries;
    for (int j = 0; j < tot[n + 1].dim; ++j) boundaries.push_back(D[n + 1].col(j));
    return Subquotient<K>(tot[n].dim, boundaries, cycles);
  }

  // I: HH_n -> HC_n, inclusion as column zero.
  Mat<K> map_I(const Subquotient<K>& hh_n, const Subquotient<K>& hc_n, int n) const {
    Mat<K> M(hc_n.dim(), hh_n.dim());
    for (int j = 0; j < hh_n.dim(); ++j) {
      std::vector<K> v(tot[n].dim, K(0));
      const auto& r = hh_n.rep(j);
      for (size_t i = 0; i < r.size(); ++i) v[tot[n].offset[0] + i] = r[i];
      auto c = hc_n.coords(v);
      for (int i = 0; i < hc_n.dim(); ++i) M.at(i, j) = c[i];
    }
    return M;
  }

  // S: HC_n -> HC_{n-2}, dropping column zero.
  Mat<K> map_S(const Subquotient<K>& hc_n, const Subquotient<K>& hc_n2, int n) const {
    Mat<K> M(hc_n2.dim(), hc_n.dim());
    for (int j = 0; j < hc_n.dim(); ++j) {
      const auto& r = hc_n.rep(j);
      std::vector<K> v(tot[n - 2].dim, K(0));
      for (size_t q = 1; q < tot[n].cdeg.size(); ++q) {
        int m = tot[n].cdeg[q];
        for (int i = 0; i < H->dim(m); ++i)
          v[tot[n - 2].offset[q - 1] + i] = r[tot[n].offset[q] + i];
      }
      auto c = hc_n2.coords(v);
      for (int i = 0; i < hc_n2.dim(); ++i) M.at(i, j) = c[i];
    }
    return M;
  }

  // Connecting map HC_{n-2} -> HH_{n-1}: apply B to the column-zero component.
  Mat<K> map_boundary(const Subquotient<K>& hc_n2, const Subquotient<K>& hh_n1, int n) const {
    int m = n - 2;  // chain degree of column zero of Tot_{n-2}
    Mat<K> M(hh_n1.dim(), hc_n2.dim());
    for (int j = 0; j < hc_n2.dim(); ++j) {
      const auto& r = hc_n2.rep(j);
      std::vector<K> x(H->dim(m), K(0));
      for (int i = 0; i < H->dim(m); ++i) x[i] = r[tot[n - 2].offset[0] + i];
      auto y = H->B[m].apply(x);
      auto c = hh_n1.coords(y);
      for (int i = 0; i < hh_n1.dim(); ++i) M.at(i, j) = c[i];
    }
    return M;
  }

  // Columnwise Hodge projector on Tot_n: e^{(i-q)} on column q.
  Mat<K> hodge_projector(int n, int i) const {
    Mat<K> M(tot[n].dim, tot[n].dim);
    for (size_t q = 0; q < tot[n].cdeg.size(); ++q) {
      int m = tot[n].cdeg[q];
      int ii = i - static_cast<int>(q);
      if (ii < 0 || ii > m) continue;
      place_block(M, tot[n].offset[q], tot[n].offset[q], H->hodge_projector(m, ii));
    }
    return M;
  }

  int hc_hodge_dim(int n, int i) const {
    if (n < 0 || n >= top) throw std::invalid_argument("hc_hodge_dim: need n < top");
    Mat<K> En = hodge_projector(n, i);
    int re = En.rank();
    int rd = (n == 0) ? 0 : (D[n] * En).rank();
    Mat<K> En1 = hodge_projector(n + 1, i);
    int rd1 = (D[n + 1] * En1).rank();
    return re - rd - rd1;
  }

 private:
  static void place_block(Mat<K>& M, int r0, int c0, const Mat<K>& B) {
    for (int i = 0; i < B.rows; ++i)
      for (int j = 0; j < B.cols; ++j)
        if (!is_zero(B.at(i, j))) M.at(r0 + i, c0 + j) += B.at(i, j);
  }
};

// Exactness of ... -> HH_n -I-> HC_n -S-> HC_{n-2} -d-> HH_{n-1} -> ... at the
// three displayed spots, verified on homology coordinates.
template <class K>
bool sbi_exact_at(const CyclicComplex<K>& C, int n) {
  if (n < 2) throw std::invalid_argument("sbi_exact_at: need n >= 2");
  auto hh_n = C.H->hh_basis(n);
  auto hh_n1 = C.H->hh_basis(n - 1);
  auto hc_n = C.hc_basis(n);
  auto hc_n2 = C.hc_basis(n - 2);
  auto hc_n1 = C.hc_basis(n - 1);
  Mat<K> I_n = C.map_I(hh_n, hc_n, n);
  Mat<K> S_n = C.map_S(hc_n, hc_n2, n);
  Mat<K> d_n = C.map_boundary(hc_n2, hh_n1, n);
  Mat<K> I_n1 = C.map_I(hh_n1, hc_n1, n - 1);
  // composites vanish
  if (!(S_n * I_n).is_zero_mat()) return false;
  if (!(d_n * S_n).is_zero_mat()) return false;
  if (!(I_n1 * d_n).is_zero_mat()) return false;
  // rank conditions: dim ker = dim im at each joint
  int ker_S = S_n.cols - S_n.rank();
  if (ker_S != I_n.rank()) return false;
  int ker_d = d_n.cols - d_n.rank();
  if (ker_d != S_n.rank()) return false;
  int ker_I1 = I_n1.cols - I_n1.rank();
  if (ker_I1 != d_n.rank()) return false;
  return true;
}

}  // namespace nk
