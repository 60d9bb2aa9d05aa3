#pragma once

#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "nk/builtin.hpp"
#include "nk/differentials.hpp"
#include "nk/hochschild.hpp"
#include "nk/polyext.hpp"
#include "nk/semigroup.hpp"

namespace nk {

// The Artinian table: every group is assembled from Hodge pieces of
// Hochschild homology and from the kernel/cokernel of the comparison of
// differential forms with the forms of the reduced ring,
//   TK_n^{(i)} = HH_{n-1}^{(i-1)}            for 0 < i < n,
//   TK_n^{(n)} = ker(Omega^{n-1} -> Omega^{n-1}_red),
//   TK_n^{(n+1)} = coker(Omega^n -> Omega^n_red),
// and zero otherwise.  The column sums are checked elsewhere against the
// homology of the nilradical fiber, which is an independent route.
template <class K>
struct ArtinianNkTable {
  std::string ring;
  int nmax = 0;
  std::vector<std::vector<int>> tk;     // [n][i], i = 0..nmax+1
  std::vector<int> total;               // [n]
  std::vector<int> fiber;               // [n] = dim HH_{n-1}(A, nil A)
  std::vector<std::vector<int>> hodge;  // [m][i] Hochschild Hodge dims
  std::vector<int> hh;                  // [m]
  std::vector<int> omega;               // [p]
  std::vector<int> omega_red;           // [p]
  std::vector<int> ker_cmp, coker_cmp;  // [p]
};

template <class K>
ArtinianNkTable<K> artinian_nk_table(std::shared_ptr<const QuotientBasis<K>> qb,
                                     std::shared_ptr<const BasisAlgebra<K>> basis, int nmax) {
  ArtinianNkTable<K> T;
  T.ring = basis->name;
  T.nmax = nmax;

  HochschildComplex<K> H(basis, 0, nmax + 1);
  for (int m = 0; m <= nmax; ++m) {
    T.hh.push_back(H.hh_dim(m));
    std::vector<int> row;
    for (int i = 0; i <= nmax + 1; ++i) row.push_back(i <= m ? H.hh_hodge_dim(m, i) : 0);
    T.hodge.push_back(row);
  }

  auto nil = nilradical_zero_dim(*qb);
  auto red_qb = std::make_shared<QuotientBasis<K>>(nil.reduced, std::nullopt);
  auto red_basis = std::make_shared<BasisAlgebra<K>>(
      basis_algebra_from_quotient(*red_qb, basis->name + " reduced"));

  for (int p = 0; p <= nmax + 1; ++p) {
    KaehlerModule<K> Mp(qb, p);
    KaehlerModule<K> MpRed(red_qb, p);
    T.omega.push_back(Mp.dim(0));
    T.omega_red.push_back(MpRed.dim(0));
    auto [kd, cd] = ker_coker(reduction_comparison_matrix(Mp, MpRed));
    T.ker_cmp.push_back(kd);
    T.coker_cmp.push_back(cd);
  }

  T.tk.assign(nmax + 1, std::vector<int>(nmax + 2, 0));
  for (int n = 0; n <= nmax; ++n) {
    for (int i = 1; i <= nmax + 1; ++i) {
      int v = 0;
      if (i < n)
        v = T.hodge[n - 1][i - 1];
      else if (i == n && n >= 1)
        v = T.ker_cmp[n - 1];
      else if (i == n + 1)
        v = T.coker_cmp[n];
      T.tk[n][i] = v;
    }
    int s = 0;
    for (int i = 0; i <= nmax + 1; ++i) s += T.tk[n][i];
    T.total.push_back(s);
  }

  // independent route: homology of the kernel of C(A) -> C(A_red)
  std::vector<std::vector<std::pair<int, K>>> img;
  for (const auto& m : qb->basis)
    img.push_back(red_qb->expand(Poly<K>::monomial(qb->A->nvars(), m, K(1))));
  HochschildComplex<K> Hred(red_basis, 0, nmax + 1);
  auto rel = relative_hh_dims(H, Hred, img, nmax);
  T.fiber.assign(nmax + 1, 0);
  for (int n = 1; n <= nmax; ++n) T.fiber[n] = rel[n - 1];
  return T;
}

// The curve table is graded by the semigroup weight.  In low indices the
// comparison target is the normalization: regular functions for p = 0, the
// one-forms of the affine line for p = 1, nothing for p >= 2.
template <class K>
struct CurveNkTable {
  std::string ring;
  int nmax = 0, wmax = 0;
  std::vector<int> gaps;
  std::vector<std::vector<std::vector<int>>> tk;  // [n][i][w]
  std::vector<std::vector<int>> total_w;          // [n][w]
  std::vector<int> total;                         // [n], summed over w <= wmax
};

template <class K>
CurveNkTable<K> curve_nk_table(const NumericalSemigroup& S, int nmax, int wmax) {
  CurveNkTable<K> T;
  {
    std::ostringstream os;
    os << "semigroup ring <";
    for (size_t i = 0; i < S.gens.size(); ++i) os << (i ? "," : "") << S.gens[i];
    os << ">";
    T.ring = os.str();
  }
  T.nmax = nmax;
  T.wmax = wmax;
  T.gaps = S.gaps;

  auto basis = std::make_shared<BasisAlgebra<K>>(semigroup_basis_algebra<K>(S, wmax));
  auto alg = semigroup_algebra<K>(S);
  auto qb = std::make_shared<QuotientBasis<K>>(alg, wmax);
  NormalizationForms<K> NF(wmax);

  // Hodge dimensions of HH per weight
  std::vector<std::vector<std::vector<int>>> hodge(wmax + 1);
  for (int w = 0; w <= wmax; ++w) {
    HochschildComplex<K> H(basis, w, nmax + 1);
    hodge[w].resize(nmax + 1);
    for (int m = 0; m <= nmax; ++m)
      for (int i = 0; i <= m; ++i) hodge[w][m].push_back(H.hh_hodge_dim(m, i));
  }

  // comparison kernels and cokernels per weight, p = 0..nmax
  std::vector<KaehlerModule<K>> omega;
  for (int p = 0; p <= nmax; ++p) omega.emplace_back(qb, p);
  std::vector<std::vector<int>> kerc(nmax + 1, std::vector<int>(wmax + 1, 0));
  std::vector<std::vector<int>> cokerc(nmax + 1, std::vector<int>(wmax + 1, 0));
  for (int p = 0; p <= nmax; ++p)
    for (int w = 0; w <= wmax; ++w) {
      if (p <= 1) {
        auto [kd, cd] = ker_coker(curve_comparison_matrix(S, omega[p], NF, w));
        kerc[p][w] = kd;
        cokerc[p][w] = cd;
      } else {
        kerc[p][w] = omega[p].dim(w);  // the target vanishes
        cokerc[p][w] = 0;
      }
    }

  T.tk.assign(nmax + 1, std::vector<std::vector<int>>(
                            nmax + 2, std::vector<int>(wmax + 1, 0)));
  T.total_w.assign(nmax + 1, std::vector<int>(wmax + 1, 0));
  T.total.assign(nmax + 1, 0);
  for (int n = 0; n <= nmax; ++n)
    for (int w = 0; w <= wmax; ++w) {
      for (int i = 1; i <= nmax + 1; ++i) {
        int v = 0;
        if (i < n)
          v = (i - 1 <= n - 1) ? hodge[w][n - 1][i - 1] : 0;
        else if (i == n && n >= 1)
          v = kerc[n - 1][w];
        else if (i == n + 1 && n <= nmax)
          v = cokerc[n][w];
        T.tk[n][i][w] = v;
        T.total_w[n][w] += v;
      }
      T.total[n] += T.total_w[n][w];
    }
  return T;
}

// One-variable Bass groups: NK_n = TK_n (x) tQ[t], so the dimension in every
// positive t-weight is the same.  Iterating the construction p times follows
// the same Pascal bookkeeping as for homology:
//   dim_J N^p K_n = C(J-1, p-1) * sum_{j<=p-1} C(p-1, j) dim TK_{n-j}.
using TkTotalFn = std::function<long long(int)>;

inline long long np_k_closed(const TkTotalFn& tk, int p, int n, int J) {
  if (p < 1) throw std::invalid_argument("np_k_closed: p >= 1");
  long long s = 0;
  for (int j = 0; j <= p - 1; ++j) s += binom_ll(p - 1, j) * tk(n - j);
  return binom_ll(J - 1, p - 1) * s;
}

inline long long np_k_recursive(const TkTotalFn& tk, int p, int n, int J) {
  if (p < 1) throw std::invalid_argument("np_k_recursive: p >= 1");
  if (p == 1) return J >= 1 ? tk(n) : 0;
  long long total = 0;
  for (int j = 1; j <= J; ++j)
    total += np_k_recursive(tk, p - 1, n, J - j) + np_k_recursive(tk, p - 1, n - 1, J - j);
  return total;
}

// Vanishing propagates downward: N^2 K_n = 0 iff NK_n = NK_{n-1} = 0.
inline bool n2k_vanishes(const TkTotalFn& tk, int n, int jmax = 4) {
  for (int J = 1; J <= jmax; ++J)
    if (np_k_closed(tk, 2, n, J) != 0) return false;
  return true;
}

// Which formula produced the (n, i) entry of a TK table.
inline std::string tk_branch_name(int n, int i) {
  if (n < 0 || i <= 0 || i >= n + 2) return "zero";
  if (i < n) return "hochschild";
  if (i == n) return "forms-kernel";
  return "forms-cokernel";
}

// Bass' question for one ring and one index n: does NK_n = 0 force
// N^2K_n = 0?  The answer needs NK_{n-1} as well, and the three vanishing
// statements satisfy the biconditional N^2K_n = 0 iff NK_n = NK_{n-1} = 0,
// which is re-verified on the computed dimensions here.
struct BassReport {
  int n = 0;
  long long nk_n = 0;     // dim TK_n = per-weight dim of NK_n
  long long nk_prev = 0;  // dim TK_{n-1}
  long long n2k_j2 = 0;   // dim of N^2K_n in t-weight 2, the first weight that can be nonzero
  bool nk_n_zero = true, nk_prev_zero = true, n2k_zero = true;
  bool k_regular_range = true;  // NK_q = 0 for every computed q <= n
  bool biconditional_ok = true;
  std::string verdict;
};

inline BassReport bass_report(const TkTotalFn& tk, int nmin, int nmax, int n) {
  if (n > nmax || n - 1 < nmin)
    throw std::invalid_argument("bass_report: table range does not cover n-1..n");
  BassReport R;
  R.n = n;
  R.nk_n = tk(n);
  R.nk_prev = tk(n - 1);
  R.nk_n_zero = R.nk_n == 0;
  R.nk_prev_zero = R.nk_prev == 0;
  R.n2k_zero = n2k_vanishes(tk, n);
  R.n2k_j2 = np_k_closed(tk, 2, n, 2);
  for (int q = nmin; q <= n; ++q)
    if (tk(q) != 0) R.k_regular_range = false;
  R.biconditional_ok = R.n2k_zero == (R.nk_n_zero && R.nk_prev_zero);

  std::ostringstream os;
  auto nk = [](int m) { return "NK_" + std::to_string(m); };
  os << nk(n) << (R.nk_n_zero ? " = 0" : " != 0 (dim " + std::to_string(R.nk_n) + " per weight)")
     << ", " << nk(n - 1)
     << (R.nk_prev_zero ? " = 0" : " != 0 (dim " + std::to_string(R.nk_prev) + " per weight)")
     << ", N^2K_" << n << (R.n2k_zero ? " = 0" : " != 0") << ": ";
  if (R.nk_n_zero && R.nk_prev_zero) {
    os << "consistent";
    if (R.k_regular_range) os << "; K_" << n << "-regular on the computed range";
  } else if (R.nk_n_zero) {
    os << "N^2K_" << n << " persists from " << nk(n - 1) << "; not K_" << n << "-regular";
  } else {
    os << "not K_" << n << "-regular";
  }
  R.verdict = os.str();
  return R;
}

// Cohomology of the Hochschild fiber: H^{-n} carries the dimension of the
// total typical piece TK_{n+1}, matching NK_{n+1} = H^{-n} (x) tQ[t].  Keys
// run from -(nmax-1) up to +1.
inline std::map<int, long long> fiber_cohomology_dims(const TkTotalFn& tk, int nmax) {
  std::map<int, long long> H;
  for (int n = -1; n + 1 <= nmax; ++n) H[-n] = tk(n + 1);
  return H;
}

// Plain-text staircase of a TK table: one row per n, one column per i.
inline std::string render_tk_table(const std::string& ring,
                                   const std::vector<std::vector<int>>& tk,
                                   const std::vector<int>& total) {
  std::ostringstream os;
  int nmax = static_cast<int>(tk.size()) - 1;
  int imax = tk.empty() ? 0 : static_cast<int>(tk[0].size()) - 1;
  os << "TK table for " << ring << "\n";
  os << "  n\\i |";
  for (int i = 0; i <= imax; ++i) os << " " << i << " ";
  os << "| total\n";
  os << "  ----+" << std::string(3 * (imax + 1), '-') << "+------\n";
  for (int n = 0; n <= nmax; ++n) {
    os << "  " << n << "   |";
    for (int i = 0; i <= imax; ++i) {
      if (tk[n][i])
        os << " " << tk[n][i] << " ";
      else
        os << " . ";
    }
    os << "| " << total[n] << "\n";
  }
  return os.str();
}

// Weight-resolved rendering for curves.
template <class K>
std::string render_curve_table(const CurveNkTable<K>& T) {
  std::ostringstream os;
  os << "TK table for " << T.ring << " (weights 1.." << T.wmax << ")\n";
  for (int n = 0; n <= T.nmax; ++n) {
    os << "  n=" << n << ": total " << T.total[n];
    std::ostringstream detail;
    bool any = false;
    for (int i = 0; i <= T.nmax + 1; ++i)
      for (int w = 0; w <= T.wmax; ++w)
        if (T.tk[n][i][w]) {
          detail << (any ? ", " : "") << "i=" << i << " w=" << w << ": " << T.tk[n][i][w];
          any = true;
        }
    if (any) os << "  [" << detail.str() << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace nk
