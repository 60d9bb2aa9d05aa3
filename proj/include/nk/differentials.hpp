#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nk/module.hpp"
#include "nk/semigroup.hpp"

namespace nk {

inline std::vector<std::vector<int>> subsets_of_size(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Sign and position of inserting variable v into the sorted index set J;
// returns {-1, 0} if v is already present.
inline std::pair<int, int> wedge_insert(const std::vector<int>& J, int v) {
  int pos = 0;
  for (int j : J) {
    if (j == v) return {-1, 0};
    if (j < v) ++pos;
  }
  return {pos, (pos % 2) ? -1 : 1};
}

// Exterior powers of the Kaehler differentials of R = K[x_1..x_r]/I as a
// presented module: generators dx_J over p-subsets J, relations df ^ dx_J'
// for the ideal generators f.
template <class K>
struct KaehlerModule {
  std::shared_ptr<const QuotientBasis<K>> R;
  int p = 0;
  std::vector<std::vector<int>> gens;  // sorted index subsets
  std::map<std::vector<int>, int> gindex;
  std::shared_ptr<PresentedModule<K>> mod;

  KaehlerModule(std::shared_ptr<const QuotientBasis<K>> ring, int p_) : R(std::move(ring)), p(p_) {
    const Algebra<K>& A = *R->A;
    int r = A.nvars();
    gens = subsets_of_size(r, p);
    for (size_t i = 0; i < gens.size(); ++i) gindex.emplace(gens[i], static_cast<int>(i));
    std::vector<int> gw;
    std::vector<std::string> gl;
    for (const auto& J : gens) {
      int w = 0;
      std::string lab;
      for (int j : J) {
        w += A.graded() ? A.weights[j] : 0;
        lab += (lab.empty() ? "d" : "^d") + A.vars[j];
      }
      if (J.empty()) lab = "1";
      gw.push_back(w);
      gl.push_back(lab);
    }
    std::vector<std::vector<std::vector<std::pair<int, K>>>> rels;
    if (p >= 1) {
      auto smaller = subsets_of_size(r, p - 1);
      for (const auto& f : A.relations) {
        std::vector<std::vector<std::pair<int, K>>> dtf(r);
        for (int v = 0; v < r; ++v) dtf[v] = R->expand(f.derivative(v));
        for (const auto& Jp : smaller) {
          std::vector<std::vector<std::pair<int, K>>> row(gens.size());
          bool nonzero = false;
          for (int v = 0; v < r; ++v) {
            auto [pos, sgn] = wedge_insert(Jp, v);
            if (pos < 0 || dtf[v].empty()) continue;
            std::vector<int> J = Jp;
            J.insert(J.begin() + pos, v);
            auto& cell = row[gindex.at(J)];
            for (const auto& [b, c] : dtf[v]) cell.emplace_back(b, K(sgn) * c);
            nonzero = true;
          }
          if (nonzero) rels.push_back(std::move(row));
        }
      }
    }
    mod = std::make_shared<PresentedModule<K>>(R, gw, gl, rels);
  }

  int dim(int w) const { return mod->dim(w); }
};

// Exterior derivative Omega^p -> Omega^{p+1} in one weight, via Leibniz on
// basis monomials: d(b dx_J) = sum_v d(b)/dx_v dx_v ^ dx_J.
template <class K>
Mat<K> de_rham_matrix(const KaehlerModule<K>& Mp, const KaehlerModule<K>& Mp1, int w) {
  const Algebra<K>& A = *Mp.R->A;
  return transport(*Mp.mod, w, *Mp1.mod, w, [&](std::pair<int, int> kb) {
    ModElt<K> out;
    const auto& J = Mp.gens[kb.first];
    Poly<K> mono = Poly<K>::monomial(A.nvars(), Mp.R->basis[kb.second], K(1));
    for (int v = 0; v < A.nvars(); ++v) {
      auto [pos, sgn] = wedge_insert(J, v);
      if (pos < 0) continue;
      Poly<K> dv = A.nf(mono.derivative(v));
      if (dv.is_zero_p()) continue;
      std::vector<int> J2 = J;
      J2.insert(J2.begin() + pos, v);
      int g2 = Mp1.gindex.at(J2);
      for (const auto& [b, c] : Mp.R->expand_nf(dv)) out[{g2, b}] += K(sgn) * c;
    }
    return out;
  });
}

// Forms on the normalization Q[t] of a semigroroup curve, as modules over the
// polynomial ring in t: p = 0 gives Q[t], p = 1 gives Q[t] dt (weight of
// t^k dt is k+1), p >= 2 gives zero.
template <class K>
struct NormalizationForms {
  std::shared_ptr<const QuotientBasis<K>> T;  // Q[t] truncated
  std::vector<std::shared_ptr<PresentedModule<K>>> omega;  // index p

  explicit NormalizationForms(int bound) {
    NumericalSemigroup N({1});
    auto alg = semigroup_algebra<K>(N);
    T = std::make_shared<QuotientBasis<K>>(alg, bound);
    omega.push_back(std::make_shared<PresentedModule<K>>(
        T, std::vector<int>{0}, std::vector<std::string>{"1"},
        std::vector<std::vector<std::vector<std::pair<int, K>>>>{}));
    omega.push_back(std::make_shared<PresentedModule<K>>(
        T, std::vector<int>{1}, std::vector<std::string>{"dt"},
        std::vector<std::vector<std::vector<std::pair<int, K>>>>{}));
  }

  const PresentedModule<K>& at(int p) const {
    if (p < 0 || p > 1) throw std::invalid_argument("NormalizationForms: p outside 0..1");
    return *omega[p];
  }
};

// Comparison map Omega^p(R) -> Omega^p(normalization) for a semigroup curve
// ring in one weight.  For p >= 2 the target is zero, so callers treat the
// cokernel as zero and the kernel as everything.
template <class K>
Mat<K> curve_comparison_matrix(const NumericalSemigroup& S, const KaehlerModule<K>& Mp,
                               const NormalizationForms<K>& NF, int w) {
  int p = Mp.p;
  if (p > 1) throw std::invalid_argument("curve_comparison_matrix: p must be 0 or 1");
  return transport(*Mp.mod, w, NF.at(p), w, [&](std::pair<int, int> kb) {
    ModElt<K> out;
    // basis monomial x^e represents t^s with s its semigroup weight
    int s = Mp.R->weight[kb.second];
    if (p == 0) {
      // t^s as an element of Q[t]
      out[{0, s}] = K(1);
    } else {
      int v = Mp.gens[kb.first][0];
      int a = S.gens[v];
      // t^s d(t^a) = a t^{s+a-1} dt
      out[{0, s + a - 1}] = K(a);
    }
    return out;
  });
}

// Comparison with the reduced ring for Artinian algebras: Omega^p(A) ->
// Omega^p(A_red) induced by the quotient map.  Both modules are ungraded, so
// everything happens in weight 0.
template <class K>
Mat<K> reduction_comparison_matrix(const KaehlerModule<K>& Mp, const KaehlerModule<K>& MpRed) {
  const Algebra<K>& Ared = *MpRed.R->A;
  return transport(*Mp.mod, 0, *MpRed.mod, 0, [&](std::pair<int, int> kb) {
    ModElt<K> out;
    Poly<K> mono = Poly<K>::monomial(Ared.nvars(), Mp.R->basis[kb.second], K(1));
    for (const auto& [b, c] : MpRed.R->expand(mono)) out[{kb.first, b}] += c;
    return out;
  });
}

// Kernel and cokernel dimensions of a matrix, as a pair.
template <class K>
std::pair<int, int> ker_coker(const Mat<K>& M) {
  int r = M.rank();
  return {M.cols - r, M.rows - r};
}

struct TorsionSubmodule {
  std::map<int, int> dims;  // weight -> dimension of the s-power torsion
  int total = 0;
  bool certified = true;  // false when the ring truncation cut off stabilization
};

// Torsion submodule tors M = ker(M -> M[1/s]) with respect to a
// nonzerodivisor s, computed by stabilizing the kernels of s^k.  Requires a
// reduced base (checked exactly in the Artinian case, within the truncation
// for graded rings) and verifies that s really is a nonzerodivisor by
// checking injectivity of multiplication on every reachable weight slice.
template <class K>
TorsionSubmodule torsion_submodule(const KaehlerModule<K>& M, const Poly<K>& s, int wmax = -1) {
  const QuotientBasis<K>& R = *M.R;
  const Algebra<K>& A = *R.A;
  Poly<K> sn = A.nf(s);
  if (sn.is_zero_p()) throw std::invalid_argument("torsion_submodule: s is zero in the ring");

  if (!R.trunc) {
    if (!nilradical_zero_dim(R).already_reduced)
      throw std::invalid_argument("torsion_submodule: base algebra is not reduced");
  } else {
    for (int b = 0; b < R.dim(); ++b) {
      int w = R.weight[b];
      if (w <= 0) continue;
      Poly<K> m = Poly<K>::monomial(A.nvars(), R.basis[b], K(1));
      Poly<K> pw = m;
      for (int tot = 2 * w; tot <= *R.trunc; tot += w) {
        pw = A.nf(pw * m);
        if (pw.is_zero_p())
          throw std::invalid_argument("torsion_submodule: base algebra is not reduced");
      }
    }
  }

  int ws = 0;
  if (A.graded()) {
    auto hw = sn.homogeneous_weight(A.weights);
    if (!hw) throw std::invalid_argument("torsion_submodule: s is not weight-homogeneous");
    ws = *hw;
  }

  // Nonzerodivisor check: multiplication by s on the algebra itself.
  std::map<int, std::vector<int>> by_w;
  for (int b = 0; b < R.dim(); ++b) by_w[R.weight[b]].push_back(b);
  std::map<int, std::map<int, int>> pos;
  for (const auto& [w, bs] : by_w)
    for (size_t j = 0; j < bs.size(); ++j) pos[w][bs[j]] = static_cast<int>(j);
  auto se = R.expand_nf(sn);
  for (const auto& [w, bs] : by_w) {
    if (R.trunc && w + ws > *R.trunc) continue;
    auto dst = by_w.find(w + ws);
    int rows = dst == by_w.end() ? 0 : static_cast<int>(dst->second.size());
    Mat<K> S(rows, static_cast<int>(bs.size()));
    for (size_t j = 0; j < bs.size(); ++j)
      for (const auto& [b1, c1] : se)
        for (const auto& [b2, c2] : R.mul(b1, bs[j])) S.at(pos[w + ws].at(b2), j) += c1 * c2;
    if (S.rank() < S.cols)
      throw std::invalid_argument("torsion_submodule: s is a zerodivisor");
  }

  TorsionSubmodule out;
  std::vector<int> weights;
  if (!R.trunc) {
    weights.push_back(0);
  } else {
    if (wmax < 0) wmax = *R.trunc;
    for (int w = 0; w <= wmax; ++w) weights.push_back(w);
  }
  for (int w : weights) {
    int prev = -1, stable = 0, k = -1;
    Mat<K> acc;
    for (int j = 1;; ++j) {
      if (R.trunc && w + j * ws > *R.trunc) {
        out.certified = false;
        k = prev < 0 ? M.dim(w) : prev;
        break;
      }
      Mat<K> step = mult_map(*M.mod, w + (j - 1) * ws, se, ws);
      acc = (j == 1) ? step : step * acc;
      k = acc.cols - acc.rank();
      if (k == prev) {
        if (++stable >= 2) break;
      } else {
        stable = 0;
        prev = k;
      }
      if (j > M.dim(w) + 4 && ws == 0) break;  // kernels of s^j stabilize by dim steps
    }
    out.dims[w] = k;
    out.total += k;
  }
  return out;
}

struct ComparisonComplexHomology {
  std::vector<int> kernel_h;    // homology of (ker C_p, d) at p = 0..pmax
  std::vector<int> cokernel_h;  // homology of (coker C_p, induced e) at p = 0..pmax
  bool exact() const {
    for (int h : kernel_h)
      if (h) return false;
    for (int h : cokernel_h)
      if (h) return false;
    return true;
  }
};

// Homology of the kernel subcomplex and cokernel complex of a map of cochain
// complexes C: (V, d) -> (W, e), from ranks alone.  With nullity(M) denoting
// cols - rank,
//   Z^p(ker)  = nullity of (d_p stacked on C_p),   B^p(ker) = nullity C_{p-1} - Z^{p-1}
//   Z^p(cok)  = nullity [e_p | C_{p+1}] - nullity C_{p+1} - rank C_p
//   B^p(cok)  = rank [e_{p-1} | C_p] - rank C_p
// The commuting squares C_{p+1} d_p = e_p C_p and d^2 = e^2 = 0 are verified,
// which is what makes B a subspace of Z on both sides.
template <class K>
ComparisonComplexHomology comparison_complex_homology(const std::vector<Mat<K>>& d,
                                                      const std::vector<Mat<K>>& e,
                                                      const std::vector<Mat<K>>& C) {
  int P = static_cast<int>(C.size()) - 1;
  if (static_cast<int>(d.size()) != P || static_cast<int>(e.size()) != P)
    throw std::invalid_argument("comparison_complex_homology: need C at 0..P and d, e at 0..P-1");
  for (int p = 0; p + 1 < P; ++p) {
    if (!(d[p + 1] * d[p]).is_zero_mat() || !(e[p + 1] * e[p]).is_zero_mat())
      throw std::logic_error("comparison_complex_homology: differential does not square to zero");
  }
  for (int p = 0; p < P; ++p)
    if (!(C[p + 1] * d[p] == e[p] * C[p]))
      throw std::logic_error("comparison_complex_homology: comparison is not a chain map");

  auto nullity = [](const Mat<K>& m) { return m.cols - m.rank(); };
  ComparisonComplexHomology H;
  int prevK = 0, prevZ = 0;
  for (int p = 0; p < P; ++p) {
    int Z = nullity(d[p].vstack(C[p]));
    int B = p == 0 ? 0 : prevK - prevZ;
    H.kernel_h.push_back(Z - B);
    prevK = nullity(C[p]);
    prevZ = Z;
  }
  for (int p = 0; p < P; ++p) {
    int Zc = nullity(e[p].hstack(C[p + 1])) - nullity(C[p + 1]) - C[p].rank();
    int Bc = p == 0 ? 0 : e[p - 1].hstack(C[p]).rank() - C[p].rank();
    H.cokernel_h.push_back(Zc - Bc);
  }
  for (int h : H.kernel_h)
    if (h < 0) throw std::logic_error("comparison_complex_homology: negative kernel homology");
  for (int h : H.cokernel_h)
    if (h < 0) throw std::logic_error("comparison_complex_homology: negative cokernel homology");
  return H;
}

// Exactness of the spliced de Rham sequences
//   0 -> nil(R) -> tors Omega^1 -> tors Omega^2 -> ...
//   0 -> R^+/R -> Omega^1_+/Omega^1 -> Omega^2_+/Omega^2 -> ...
// for an Artinian algebra, where the plus side is the reduced quotient and
// tors Omega^p means the kernel of the comparison map.  Reports per-position
// homology dimensions; all zeros means both sequences are exact.
template <class K>
ComparisonComplexHomology artinian_de_rham_exactness(
    std::shared_ptr<const QuotientBasis<K>> qb, int pmax) {
  auto nil = nilradical_zero_dim(*qb);
  auto red = std::make_shared<QuotientBasis<K>>(nil.reduced, std::nullopt);
  std::vector<KaehlerModule<K>> V, W;
  for (int p = 0; p <= pmax + 1; ++p) {
    V.emplace_back(qb, p);
    W.emplace_back(red, p);
  }
  std::vector<Mat<K>> d, e, C;
  for (int p = 0; p <= pmax; ++p) {
    d.push_back(de_rham_matrix(V[p], V[p + 1], 0));
    e.push_back(de_rham_matrix(W[p], W[p + 1], 0));
  }
  for (int p = 0; p <= pmax + 1; ++p) C.push_back(reduction_comparison_matrix(V[p], W[p]));
  return comparison_complex_homology(d, e, C);
}

// Same two sequences for a numerical-semigroup curve in a single weight,
// where the plus side is the normalization Q[t].
template <class K>
ComparisonComplexHomology curve_de_rham_exactness(const NumericalSemigroup& S,
                                                  std::shared_ptr<const QuotientBasis<K>> qb,
                                                  const NormalizationForms<K>& NF, int w,
                                                  int pmax) {
  std::vector<KaehlerModule<K>> V;
  for (int p = 0; p <= pmax + 1; ++p) V.emplace_back(qb, p);
  std::vector<Mat<K>> d, e, C;
  for (int p = 0; p <= pmax; ++p) d.push_back(de_rham_matrix(V[p], V[p + 1], w));
  for (int p = 0; p <= pmax; ++p) {
    int src = p == 0 ? NF.at(0).dim(w) : (p == 1 ? NF.at(1).dim(w) : 0);
    int dst = p == 0 ? NF.at(1).dim(w) : 0;
    Mat<K> ep(dst, src);
    if (p == 0 && src == 1 && dst == 1) ep.at(0, 0) = K(w);  // d(t^w) = w t^{w-1} dt
    e.push_back(ep);
  }
  for (int p = 0; p <= pmax + 1; ++p) {
    if (p <= 1)
      C.push_back(curve_comparison_matrix(S, V[p], NF, w));
    else
      C.push_back(Mat<K>(0, V[p].dim(w)));
  }
  return comparison_complex_homology(d, e, C);
}

}  // namespace nk
