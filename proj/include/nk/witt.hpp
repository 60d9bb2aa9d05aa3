#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "nk/algebra.hpp"
#include "nk/hochschild.hpp"
#include "nk/matrix.hpp"

namespace nk {

// Big Witt vectors over an exact field (characteristic zero): ghost
// coordinates gh_n(w) = sum_{e | n} e * w_e^{n/e} identify W(K) with a
// countable product of copies of K.
template <class K>
std::vector<K> ghost_coordinates(const std::vector<K>& w, int N) {
  // w[e-1] is the e-th Witt coordinate; missing entries are zero
  std::vector<K> gh(N, K(0));
  for (int n = 1; n <= N; ++n)
    for (int e = 1; e <= n; ++e) {
      if (n % e) continue;
      K we = (e <= static_cast<int>(w.size())) ? w[e - 1] : K(0);
      K pw(1);
      for (int i = 0; i < n / e; ++i) pw *= we;
      gh[n - 1] += K(e) * pw;
    }
  return gh;
}

template <class K>
std::vector<K> witt_from_ghost(const std::vector<K>& gh) {
  int N = static_cast<int>(gh.size());
  std::vector<K> w(N, K(0));
  for (int n = 1; n <= N; ++n) {
    K acc = gh[n - 1];
    for (int e = 1; e < n; ++e) {
      if (n % e) continue;
      K pw(1);
      for (int i = 0; i < n / e; ++i) pw *= w[e - 1];
      acc -= K(e) * pw;
    }
    w[n - 1] = acc / K(n);
  }
  return w;
}

// The graded model carrying the operator calculus: M = sum_{j=1}^N M_j with
// every component a copy of one finite-dimensional module M0 over a ring R
// presented by commuting generator actions.  Verschiebung moves t^j to t^{mj},
// Frobenius divides the exponent, and the multiplicative lift [r] acts on the
// j-th component through the j-th power of the multiplication action.
template <class K>
struct CartierModel {
  int N = 0;
  int d = 0;
  int nvars = 0;
  std::vector<Mat<K>> gen_action;

  CartierModel(int N_, int dim, std::vector<Mat<K>> gens)
      : N(N_), d(dim), nvars(static_cast<int>(gens.size())), gen_action(std::move(gens)) {
    for (const auto& g : gen_action)
      if (g.rows != d || g.cols != d)
        throw std::invalid_argument("CartierModel: action shape mismatch");
    for (int a = 0; a < nvars; ++a)
      for (int b = a + 1; b < nvars; ++b)
        if (!(gen_action[a] * gen_action[b] == gen_action[b] * gen_action[a]))
          throw std::invalid_argument("CartierModel: generator actions do not commute");
  }

  // Action of a polynomial in the ring generators.
  Mat<K> eval_action(const Poly<K>& r) const {
    Mat<K> out(d, d);
    for (const auto& [m, c] : r.t) {
      Mat<K> term = Mat<K>::identity(d);
      for (int v = 0; v < nvars; ++v)
        for (int e = 0; e < m[v]; ++e) term = term * gen_action[v];
      out = out + c * term;
    }
    return out;
  }

  void check_weight(int j) const {
    if (j < 1 || j > N) throw std::out_of_range("CartierModel: weight outside 1..N");
  }

  // V_m on the j-th component: target weight m*j, identity matrix.
  int V_target(int m, int j) const {
    check_weight(j);
    if (m < 1) throw std::invalid_argument("V: m >= 1");
    if (static_cast<long long>(m) * j > N)
      throw std::out_of_range("CartierModel: V exceeds the truncation");
    return m * j;
  }

  // F_m on the j-th component: returns target weight and scalar factor
  // (m when m | j, otherwise the zero map signalled by target -1).
  std::pair<int, K> F_target(int m, int j) const {
    check_weight(j);
    if (m < 1) throw std::invalid_argument("F: m >= 1");
    if (j % m) return {-1, K(0)};
    return {j / m, K(m)};
  }

  // [r] on the j-th component.
  Mat<K> teich(const Poly<K>& r, int j) const {
    check_weight(j);
    Mat<K> a = eval_action(r);
    Mat<K> out = Mat<K>::identity(d);
    for (int i = 0; i < j; ++i) out = out * a;
    return out;
  }

  // A truncated Witt vector (w_1, ..., w_k) of ring elements acts on the j-th
  // component through its j-th ghost coordinate.
  Mat<K> witt_action(const std::vector<Poly<K>>& w, int j) const {
    check_weight(j);
    Mat<K> out(d, d);
    for (int e = 1; e <= j && e <= static_cast<int>(w.size()); ++e) {
      if (j % e) continue;
      Mat<K> a = eval_action(w[e - 1]);
      Mat<K> pw = Mat<K>::identity(d);
      for (int i = 0; i < j / e; ++i) pw = pw * a;
      out = out + K(e) * pw;
    }
    return out;
  }

  // The operator identities, checked componentwise wherever all intermediate
  // weights stay within 1..N.  Returns an explanation on failure.
  bool check_identities(int mmax, const std::vector<Poly<K>>& probes, std::string* why) const {
    auto fail = [&](const std::string& s) {
      if (why) *why = s;
      return false;
    };
    for (int m = 1; m <= mmax; ++m)
      for (int j = 1; j <= N; ++j) {
        // F_m V_m = m
        if (static_cast<long long>(m) * j <= N) {
          auto [tj, f] = F_target(m, V_target(m, j));
          if (tj != j || f != K(m)) return fail("F_m V_m != m at j=" + std::to_string(j));
        }
        for (int m2 = 1; m2 <= mmax; ++m2) {
          // V_m V_m2 = V_{m m2}
          if (static_cast<long long>(m) * m2 * j <= N) {
            if (V_target(m, V_target(m2, j)) != V_target(m * m2, j))
              return fail("V_m V_m' != V_{mm'}");
          }
          // F_m F_m2 = F_{m m2}
          {
            auto [t1, f1] = F_target(m2, j);
            std::pair<int, K> lhs{-1, K(0)};
            if (t1 != -1) {
              auto [t2, f2] = F_target(m, t1);
              if (t2 != -1) lhs = {t2, f1 * f2};
            }
            auto rhs = F_target(m * m2, j);
            if (lhs.first != rhs.first || (lhs.first != -1 && lhs.second != rhs.second))
              return fail("F_m F_m' != F_{mm'}");
          }
          // F_m V_m2 = V_m2 F_m when gcd(m, m2) = 1
          if (std::gcd(m, m2) == 1 && static_cast<long long>(m2) * j <= N) {
            auto [tl, fl] = F_target(m, V_target(m2, j));
            auto [tf, ff] = F_target(m, j);
            std::pair<int, K> rhs{-1, K(0)};
            if (tf != -1 && static_cast<long long>(m2) * tf <= N)
              rhs = {V_target(m2, tf), ff};
            if (tl != rhs.first || (tl != -1 && fl != rhs.second))
              return fail("F_m V_m' != V_m' F_m for coprime m, m'");
          }
        }
      }
    // multiplicative identities
    for (const auto& r : probes)
      for (const auto& s : probes)
        for (int j = 1; j <= N; ++j) {
          if (!(teich(r, j) * teich(s, j) == teich(r * s, j)))
            return fail("[r][s] != [rs] at j=" + std::to_string(j));
        }
    for (const auto& r : probes)
      for (int m = 1; m <= mmax; ++m) {
        for (int j = 1; j <= N; ++j) {
          // [r] V_m = V_m [r^m]: compare actions landing in weight mj
          if (static_cast<long long>(m) * j <= N) {
            Mat<K> lhs = teich(r, m * j);           // [r] after V_m
            Mat<K> rhs = teich(r.pow(m), j);        // [r^m] before V_m
            if (!(lhs == rhs)) return fail("[r] V_m != V_m [r^m]");
          }
          // F_m [r] = [r^m] F_m
          if (j % m == 0) {
            Mat<K> lhs = K(m) * teich(r, j);
            Mat<K> rhs = K(m) * teich(r.pow(m), j / m);
            if (!(lhs == rhs)) return fail("F_m [r] != [r^m] F_m");
          }
        }
      }
    return true;
  }

  // Intersection over probes r of ker([r] - r .) on the j-th component; the
  // probes must include a non-trivial scalar so weights j >= 2 are killed.
  int typical_piece_dim(const std::vector<Poly<K>>& probes, int j) const {
    check_weight(j);
    std::vector<Mat<K>> parts;
    for (const auto& r : probes) parts.push_back(teich(r, j) - eval_action(r));
    Mat<K> M(static_cast<int>(parts.size()) * d, d);
    int r0 = 0;
    for (const auto& p : parts) {
      for (int i = 0; i < p.rows; ++i)
        for (int c = 0; c < d; ++c) M.at(r0 + i, c) = p.at(i, c);
      r0 += p.rows;
    }
    return d - M.rank();
  }
};

// Multiplication by an algebra element (sparse coefficient vector over the
// ring basis, weight zero so degrees are preserved) acts on Hochschild chains
// through the zeroth slot; this commutes with b face by face, so it descends
// to homology.  Returns the induced matrix in hh_basis(m) coordinates.
template <class K>
Mat<K> hh_mult_matrix(const HochschildComplex<K>& H, int m,
                      const Subquotient<K>& S,
                      const std::vector<std::pair<int, K>>& elt) {
  int D = H.dim(m);
  Mat<K> chain(D, D);
  for (int t = 0; t < D; ++t) {
    const auto& T = H.tuples[m][t];
    for (const auto& [i, c] : elt)
      for (const auto& [u, e] : H.A->mul(i, T[0])) {
        std::vector<int> T2 = T;
        T2[0] = u;
        auto it = H.tindex[m].find(T2);
        if (it == H.tindex[m].end())
          throw std::logic_error("hh_mult_matrix: element changes the weight");
        chain.at(it->second, t) += c * e;
      }
  }
  int n = S.dim();
  Mat<K> out(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<K> img = chain.apply(S.rep(j));
    std::vector<K> co = S.coords(img);
    for (int i = 0; i < n; ++i) out.at(i, j) = co[i];
  }
  return out;
}

// Builds the standard one-parameter model on HH_m of a weight-zero algebra,
// with the ring acting through its generators.  gens[v] is the sparse basis
// expansion of the v-th ring generator.
template <class K>
CartierModel<K> cartier_from_hh(const HochschildComplex<K>& H, int m, int N,
                                const std::vector<std::vector<std::pair<int, K>>>& gens) {
  Subquotient<K> S = H.hh_basis(m);
  std::vector<Mat<K>> act;
  for (const auto& g : gens) act.push_back(hh_mult_matrix(H, m, S, g));
  return CartierModel<K>(N, S.dim(), std::move(act));
}

}  // namespace nk
