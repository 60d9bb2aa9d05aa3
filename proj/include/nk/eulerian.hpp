#pragma once

#include <map>
#include <vector>

#include "nk/rational.hpp"

namespace nk {

// The symmetric group S_n with a fixed enumeration, composition table on
// demand, signs and descent counts.  Permutations are stored in one-line
// notation on {0..n-1}.
struct SymmetricGroup {
  int n;
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;

  explicit SymmetricGroup(int n_) : n(n_) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
      index.emplace(p, static_cast<int>(elems.size()));
      elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  int size() const { return static_cast<int>(elems.size()); }

  int compose(int a, int b) const {  // (a*b)(i) = a(b(i))
    const auto& pa = elems[a];
    const auto& pb = elems[b];
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = pa[pb[i]];
    return index.at(c);
  }

  int inverse(int a) const {
    const auto& pa = elems[a];
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[pa[i]] = i;
    return index.at(c);
  }

  static int sign_of(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    return (inv % 2) ? -1 : 1;
  }

  int sign(int a) const { return sign_of(elems[a]); }

  static int descents(const std::vector<int>& p) {
    int d = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) ++d;
    return d;
  }
};

// Element of the rational group algebra Q[S_n], dense over the enumeration.
struct GroupAlgElt {
  std::vector<Rat> c;

  static GroupAlgElt zero(const SymmetricGroup& G) {
    GroupAlgElt x;
    x.c.assign(G.size(), Rat(0));
    return x;
  }

  static GroupAlgElt unit(const SymmetricGroup& G) {
    GroupAlgElt x = zero(G);
    std::vector<int> id(G.n);
    for (int i = 0; i < G.n; ++i) id[i] = i;
    x.c[G.index.at(id)] = 1;
    return x;
  }

  GroupAlgElt mul(const SymmetricGroup& G, const GroupAlgElt& other) const {
    GroupAlgElt r = zero(G);
    for (int a = 0; a < G.size(); ++a) {
      if (is_zero(c[a])) continue;
      for (int b = 0; b < G.size(); ++b) {
        if (is_zero(other.c[b])) continue;
        r.c[G.compose(a, b)] += c[a] * other.c[b];
      }
    }
    return r;
  }

  bool is_zero_elt() const {
    for (const auto& x : c)
      if (!is_zero(x)) return false;
    return true;
  }

  friend GroupAlgElt operator-(const GroupAlgElt& a, const GroupAlgElt& b) {
    GroupAlgElt r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend GroupAlgElt operator+(const GroupAlgElt& a, const GroupAlgElt& b) {
    GroupAlgElt r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
};

// Coefficients of binom(k + n - 1 - d, n) as a polynomial in k, exact.
inline std::vector<Rat> binom_poly_coeffs(int n, int d) {
  // product_{j=0}^{n-1} (k + n - 1 - d - j) / n!
  std::vector<Rat> p = {Rat(1)};
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> q(p.size() + 1, Rat(0));
    Rat a(n - 1 - d - j);
    for (size_t i = 0; i < p.size(); ++i) {
      q[i] += a * p[i];
      q[i + 1] += p[i];
    }
    p = std::move(q);
  }
  Rat fact(1);
  for (int j = 2; j <= n; ++j) fact *= j;
  for (auto& x : p) x /= fact;
  return p;
}

// The spectral idempotents of the lambda-operations: lambda(k) =
// sum_sigma binom(k + n - 1 - des(sigma), n) sigma = sum_i k^i e^{(i)}.
// Returns e^{(0)}..e^{(n)} as group algebra elements.  e^{(0)} = 0 for n >= 1;
// the e^{(i)} are orthogonal idempotents summing to the identity.
inline std::vector<GroupAlgElt> eulerian_idempotents(const SymmetricGroup& G) {
  int n = G.n;
  std::vector<GroupAlgElt> e(n + 1, GroupAlgElt::zero(G));
  std::vector<std::vector<Rat>> by_d;
  for (int d = 0; d < std::max(n, 1); ++d) by_d.push_back(binom_poly_coeffs(n, d));
  for (int s = 0; s < G.size(); ++s) {
    int d = SymmetricGroup::descents(G.elems[s]);
    const auto& coeffs = by_d[d];
    for (int i = 0; i <= n && i < static_cast<int>(coeffs.size()); ++i) e[i].c[s] = coeffs[i];
  }
  return e;
}

}  // namespace nk
