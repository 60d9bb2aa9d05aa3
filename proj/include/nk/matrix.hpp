#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nk/rational.hpp"

namespace nk {

// Dense matrix over an exact field.  All elimination is fraction-free in the
// sense that it runs in exact arithmetic; no pivot thresholds are involved.
template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K(0)) {}

  K& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const K& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  static Mat from_cols(int nrows, const std::vector<std::vector<K>>& cols_) {
    Mat m(nrows, static_cast<int>(cols_.size()));
    for (size_t j = 0; j < cols_.size(); ++j) {
      if (static_cast<int>(cols_[j].size()) != nrows)
        throw std::invalid_argument("Mat::from_cols: column length mismatch");
      for (int i = 0; i < nrows; ++i) m.at(i, static_cast<int>(j)) = cols_[j][i];
    }
    return m;
  }

  std::vector<K> col(int j) const {
    std::vector<K> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  std::vector<K> apply(const std::vector<K>& x) const {
    if (static_cast<int>(x.size()) != cols)
      throw std::invalid_argument("Mat::apply: size mismatch");
    std::vector<K> y(rows, K(0));
    for (int i = 0; i < rows; ++i) {
      K acc(0);
      for (int j = 0; j < cols; ++j)
        if (!is_zero(at(i, j)) && !is_zero(x[j])) acc += at(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

  friend Mat operator*(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("Mat::mul: shape mismatch");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
      for (int k = 0; k < A.cols; ++k) {
        const K& aik = A.at(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < B.cols; ++j)
          if (!is_zero(B.at(k, j))) C.at(i, j) += aik * B.at(k, j);
      }
    return C;
  }

  friend Mat operator+(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols)
      throw std::invalid_argument("Mat::add: shape mismatch");
    Mat C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
  }

  friend Mat operator-(const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols)
      throw std::invalid_argument("Mat::sub: shape mismatch");
    Mat C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
  }

  friend Mat operator*(const K& s, const Mat& A) {
    Mat C = A;
    for (auto& x : C.a) x = s * x;
    return C;
  }

  friend bool operator==(const Mat& A, const Mat& B) {
    return A.rows == B.rows && A.cols == B.cols && A.a == B.a;
  }

  bool is_zero_mat() const {
    for (const auto& x : a)
      if (!is_zero(x)) return false;
    return true;
  }

  Mat transpose() const {
    Mat T(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
    return T;
  }

  Mat hstack(const Mat& B) const {
    if (rows != B.rows) throw std::invalid_argument("Mat::hstack: row mismatch");
    Mat C(rows, cols + B.cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) C.at(i, j) = at(i, j);
      for (int j = 0; j < B.cols; ++j) C.at(i, cols + j) = B.at(i, j);
    }
    return C;
  }

  Mat vstack(const Mat& B) const {
    if (cols != B.cols) throw std::invalid_argument("Mat::vstack: column mismatch");
    Mat C(rows + B.rows, cols);
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < rows; ++i) C.at(i, j) = at(i, j);
      for (int i = 0; i < B.rows; ++i) C.at(rows + i, j) = B.at(i, j);
    }
    return C;
  }

  // Reduced row echelon form in place; returns pivot column indices.
  std::vector<int> rref_inplace() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (!is_zero(at(i, c))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      K inv = K(1) / at(r, c);
      for (int j = c; j < cols; ++j) at(r, j) = inv * at(r, j);
      for (int i = 0; i < rows; ++i) {
        if (i == r || is_zero(at(i, c))) continue;
        K f = at(i, c);
        for (int j = c; j < cols; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Mat tmp = *this;
    return static_cast<int>(tmp.rref_inplace().size());
  }

  // Basis of the null space, one column vector per free column.
  std::vector<std::vector<K>> kernel_basis() const {
    Mat R = *this;
    std::vector<int> piv = R.rref_inplace();
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<K>> basis;
    for (int f = 0; f < cols; ++f) {
      if (is_piv[f]) continue;
      std::vector<K> v(cols, K(0));
      v[f] = K(1);
      for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -R.at(static_cast<int>(i), f);
      basis.push_back(std::move(v));
    }
    return basis;
  }
};

// Repeated-solve helper: factors A once and answers A x = b queries.
template <class K>
struct LinSolver {
  Mat<K> R;               // rref of A
  Mat<K> T;               // row-operation matrix with R = T * A
  std::vector<int> piv;   // pivot columns of R
  int rank = 0;

  LinSolver() = default;
  explicit LinSolver(const Mat<K>& A) {
    Mat<K> aug = A.hstack(Mat<K>::identity(A.rows));
    // Eliminate using only the A-part for pivot selection.
    int r = 0;
    for (int c = 0; c < A.cols && r < aug.rows; ++c) {
      int p = -1;
      for (int i = r; i < aug.rows; ++i)
        if (!is_zero(aug.at(i, c))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < aug.cols; ++j) std::swap(aug.at(p, j), aug.at(r, j));
      K inv = K(1) / aug.at(r, c);
      for (int j = 0; j < aug.cols; ++j) aug.at(r, j) = inv * aug.at(r, j);
      for (int i = 0; i < aug.rows; ++i) {
        if (i == r || is_zero(aug.at(i, c))) continue;
        K f = aug.at(i, c);
        for (int j = 0; j < aug.cols; ++j) aug.at(i, j) -= f * aug.at(r, j);
      }
      piv.push_back(c);
      ++r;
    }
    rank = r;
    R = Mat<K>(A.rows, A.cols);
    T = Mat<K>(A.rows, A.rows);
    for (int i = 0; i < A.rows; ++i) {
      for (int j = 0; j < A.cols; ++j) R.at(i, j) = aug.at(i, j);
      for (int j = 0; j < A.rows; ++j) T.at(i, j) = aug.at(i, A.cols + j);
    }
  }

  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    std::vector<K> bp = T.apply(b);
    for (int i = rank; i < static_cast<int>(bp.size()); ++i)
      if (!is_zero(bp[i])) return std::nullopt;
    std::vector<K> x(R.cols, K(0));
    // R is reduced, so setting the pivot coordinates suffices.
    for (int i = 0; i < rank; ++i) x[piv[i]] = bp[i];
    return x;
  }

  bool in_span(const std::vector<K>& b) const { return solve(b).has_value(); }

  // Solve A X = B columnwise; throws if any column is inconsistent.
  Mat<K> solve_many(const Mat<K>& B) const {
    Mat<K> X(R.cols, B.cols);
    for (int j = 0; j < B.cols; ++j) {
      auto x = solve(B.col(j));
      if (!x) throw std::logic_error("LinSolver::solve_many: inconsistent system");
      for (int i = 0; i < R.cols; ++i) X.at(i, j) = (*x)[i];
    }
    return X;
  }
};

// A subquotient span(cycles + boundaries)/span(boundaries) with a chosen basis
// of representing cycles and a coordinate map for vectors in the numerator.
template <class K>
struct Subquotient {
  int ambient_dim = 0;
  std::vector<std::vector<K>> reps;  // homology basis representatives
  LinSolver<K> solver;               // factors [boundary basis | reps]
  int boundary_rank = 0;

  Subquotient() = default;
  Subquotient(int ambient, const std::vector<std::vector<K>>& boundaries,
              const std::vector<std::vector<K>>& cycles)
      : ambient_dim(ambient) {
    // Incremental elimination rows: pairs (pivot index, reduced vector).
    std::vector<std::pair<int, std::vector<K>>> rows;
    std::vector<std::vector<K>> bnd_basis;
    auto reduce = [&](std::vector<K> v) {
      for (auto& [p, row] : rows) {
        if (is_zero(v[p])) continue;
        K f = v[p];
        for (int i = 0; i < ambient_dim; ++i) v[i] -= f * row[i];
      }
      return v;
    };
    auto insert = [&](const std::vector<K>& v) -> bool {
      std::vector<K> w = reduce(v);
      int p = -1;
      for (int i = 0; i < ambient_dim; ++i)
        if (!is_zero(w[i])) {
          p = i;
          break;
        }
      if (p < 0) return false;
      K inv = K(1) / w[p];
      for (auto& x : w) x = inv * x;
      rows.emplace_back(p, std::move(w));
      return true;
    };
    for (const auto& b : boundaries)
      if (insert(b)) bnd_basis.push_back(b);
    boundary_rank = static_cast<int>(bnd_basis.size());
    for (const auto& z : cycles)
      if (insert(z)) reps.push_back(z);
    std::vector<std::vector<K>> all = bnd_basis;
    for (const auto& r : reps) all.push_back(r);
    solver = LinSolver<K>(Mat<K>::from_cols(ambient_dim, all));
  }

  int dim() const { return static_cast<int>(reps.size()); }

  const std::vector<K>& rep(int j) const { return reps.at(j); }

  // Coordinates of the class of v in the chosen homology basis.
  std::vector<K> coords(const std::vector<K>& v) const {
    auto x = solver.solve(v);
    if (!x) throw std::logic_error("Subquotient::coords: vector not in subspace");
    return std::vector<K>(x->begin() + boundary_rank, x->end());
  }
};

}  // namespace nk
