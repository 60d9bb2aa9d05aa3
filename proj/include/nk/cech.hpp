#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nk/algebra.hpp"
#include "nk/matrix.hpp"

namespace nk {

// A graded inclusion A -> B of finitely presented algebras, with the images
// of A's variables given as polynomials in B's variables.
template <class K>
struct GradedExtension {
  std::shared_ptr<const Algebra<K>> A;
  std::shared_ptr<const Algebra<K>> B;
  std::vector<Poly<K>> phi;

  GradedExtension(std::shared_ptr<const Algebra<K>> a, std::shared_ptr<const Algebra<K>> b,
                  std::vector<Poly<K>> images)
      : A(std::move(a)), B(std::move(b)), phi(std::move(images)) {
    if (!A->graded() || !B->graded())
      throw std::invalid_argument("GradedExtension: both algebras must be graded");
    if (static_cast<int>(phi.size()) != A->nvars())
      throw std::invalid_argument("GradedExtension: one image per source variable");
    for (int i = 0; i < A->nvars(); ++i) {
      if (phi[i].nvars != B->nvars())
        throw std::invalid_argument("GradedExtension: image arity mismatch");
      Poly<K> img = B->nf(phi[i]);
      if (img.is_zero_p()) continue;
      auto w = img.homogeneous_weight(B->weights);
      if (!w) throw std::invalid_argument("GradedExtension: image not homogeneous");
      if (*w != A->weights[i])
        throw std::invalid_argument("GradedExtension: image weight mismatch");
    }
  }

  // image of a source monomial, reduced in B
  Poly<K> apply(const Mono& m) const {
    Poly<K> out = Poly<K>::constant(B->nvars(), K(1));
    for (int i = 0; i < A->nvars(); ++i)
      if (m[i]) out = out * phi[i].pow(m[i]);
    return B->nf(out);
  }
};

// B tensor_A B presented by doubling B's variables and identifying the two
// images of every A-generator.
template <class K>
std::shared_ptr<Algebra<K>> tensor_square(const GradedExtension<K>& E) {
  const Algebra<K>& B = *E.B;
  int k = B.nvars();
  auto relocate = [&](const Poly<K>& p, int shift) {
    Poly<K> out(2 * k);
    for (const auto& [m, c] : p.t) {
      Mono m2(2 * k, 0);
      for (int i = 0; i < k; ++i) m2[i + shift] = m[i];
      out.t[m2] = c;
    }
    return out;
  };
  std::vector<std::string> vars;
  std::vector<int> weights;
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < k; ++i) {
      vars.push_back(B.vars[i] + (s ? "'" : ""));
      weights.push_back(B.weights[i]);
    }
  std::vector<Poly<K>> rels;
  for (const auto& r : B.relations) {
    rels.push_back(relocate(r, 0));
    rels.push_back(relocate(r, k));
  }
  for (const auto& f : E.phi) rels.push_back(relocate(f, 0) - relocate(f, k));
  return std::make_shared<Algebra<K>>(std::move(vars), std::move(rels), B.ord,
                                      std::move(weights));
}

// Graded piece of an algebra as an indexed monomial basis.
template <class K>
struct GradedSlices {
  std::vector<std::vector<Mono>> by_degree;
  std::vector<std::map<Mono, int>> index;

  GradedSlices(const Algebra<K>& A, int bound) {
    by_degree.resize(bound + 1);
    index.resize(bound + 1);
    for (const auto& m : standard_monomials(A, bound)) {
      int w = A.weight_of(m);
      index[w].emplace(m, static_cast<int>(by_degree[w].size()));
      by_degree[w].push_back(m);
    }
  }

  int dim(int d) const { return static_cast<int>(by_degree[d].size()); }

  std::vector<K> coords(const Poly<K>& reduced, int d) const {
    std::vector<K> v(dim(d), K(0));
    for (const auto& [m, c] : reduced.t) {
      auto it = index[d].find(m);
      if (it == index[d].end())
        throw std::logic_error("GradedSlices: normal form leaves the expected degree");
      v[it->second] += c;
    }
    return v;
  }
};

struct CechDegreeReport {
  int degree = 0;
  int dim_a = 0, dim_b = 0, dim_bb = 0;
  int image = 0;      // rank of A_d -> B_d
  int equalizer = 0;  // dim ker(b |-> b(x)1 - 1(x)b) in degree d
  bool injective = false;
  bool exact = false;  // equalizer coincides with the image of A
};

// The degreewise cohomology of 0 -> A -> B -> B (x)_A B, the last map being
// the difference of the two coordinate inclusions.
template <class K>
std::vector<CechDegreeReport> cech_exactness(const GradedExtension<K>& E, int bound) {
  auto T = tensor_square(E);
  GradedSlices<K> SA(*E.A, bound), SB(*E.B, bound), ST(*T, bound);
  int k = E.B->nvars();

  std::vector<CechDegreeReport> out;
  for (int d = 0; d <= bound; ++d) {
    CechDegreeReport r;
    r.degree = d;
    r.dim_a = SA.dim(d);
    r.dim_b = SB.dim(d);
    r.dim_bb = ST.dim(d);

    Mat<K> phi(r.dim_b, r.dim_a);
    for (int j = 0; j < r.dim_a; ++j) {
      auto img = SB.coords(E.apply(SA.by_degree[d][j]), d);
      for (int i = 0; i < r.dim_b; ++i) phi.at(i, j) = img[i];
    }
    Mat<K> delta(r.dim_bb, r.dim_b);
    for (int j = 0; j < r.dim_b; ++j) {
      const Mono& m = SB.by_degree[d][j];
      Mono m1(2 * k, 0), m2(2 * k, 0);
      for (int i = 0; i < k; ++i) {
        m1[i] = m[i];
        m2[i + k] = m[i];
      }
      Poly<K> diff(2 * k);
      diff.t[m1] += K(1);
      diff.t[m2] -= K(1);
      auto img = ST.coords(T->nf(diff), d);
      for (int i = 0; i < r.dim_bb; ++i) delta.at(i, j) = img[i];
    }

    if (!(delta * phi).is_zero_mat())
      throw std::logic_error("cech_exactness: the two composites differ on the image of A");
    r.image = phi.rank();
    r.equalizer = r.dim_b - delta.rank();
    r.injective = (r.image == r.dim_a);
    r.exact = r.injective && (r.equalizer == r.image);
    out.push_back(r);
  }
  return out;
}

// Bounded certificate that B is generated as an A-module by its basis
// elements of degree <= gen_bound, checked in all degrees <= check_bound.
template <class K>
bool module_finite_probe(const GradedExtension<K>& E, int gen_bound, int check_bound) {
  GradedSlices<K> SA(*E.A, check_bound), SB(*E.B, check_bound);
  for (int d = 0; d <= check_bound; ++d) {
    std::vector<std::vector<K>> spanning;
    for (int g = 0; g <= std::min(d, gen_bound); ++g)
      for (const auto& e : SB.by_degree[g])
        for (const auto& a : SA.by_degree[d - g]) {
          Poly<K> prod = E.B->nf(E.apply(a) * Poly<K>::monomial(E.B->nvars(), e, K(1)));
          spanning.push_back(SB.coords(prod, d));
        }
    Mat<K> M(SB.dim(d), static_cast<int>(spanning.size()));
    for (size_t j = 0; j < spanning.size(); ++j)
      for (int i = 0; i < SB.dim(d); ++i) M.at(i, static_cast<int>(j)) = spanning[j][i];
    if (M.rank() != SB.dim(d)) return false;
  }
  return true;
}

// The smallest degree bound whose basis elements generate B over A, found by
// a bounded search; throws when no bound up to max_gen_bound certifies.
template <class K>
int module_generation_bound(const GradedExtension<K>& E, int max_gen_bound, int check_bound) {
  for (int g = 0; g <= max_gen_bound; ++g)
    if (module_finite_probe(E, g, check_bound)) return g;
  throw std::runtime_error(
      "module_generation_bound: no generating set found within the search bound; "
      "the extension does not look module-finite");
}

// The two standard test extensions.
inline GradedExtension<Rat> cusp_normalization_extension() {
  Poly<Rat> t = Poly<Rat>::variable(1, 0);
  auto A = std::make_shared<Algebra<Rat>>(
      std::vector<std::string>{"x", "y"},
      std::vector<Poly<Rat>>{Poly<Rat>::monomial(2, {3, 0}, Rat(1)) -
                             Poly<Rat>::monomial(2, {0, 2}, Rat(1))},
      MonomialOrder::degrevlex(), std::vector<int>{2, 3});
  auto B = std::make_shared<Algebra<Rat>>(std::vector<std::string>{"t"},
                                          std::vector<Poly<Rat>>{}, MonomialOrder::degrevlex(),
                                          std::vector<int>{1});
  return GradedExtension<Rat>(A, B, {t.pow(2), t.pow(3)});
}

inline GradedExtension<Rat> cross_normalization_extension() {
  auto A = std::make_shared<Algebra<Rat>>(
      std::vector<std::string>{"x", "y"},
      std::vector<Poly<Rat>>{Poly<Rat>::monomial(2, {1, 1}, Rat(1))}, MonomialOrder::degrevlex(),
      std::vector<int>{1, 1});
  // B = Q[u] x Q[v] with idempotent e = (1, 0)
  Poly<Rat> u = Poly<Rat>::variable(3, 0), v = Poly<Rat>::variable(3, 1),
            e = Poly<Rat>::variable(3, 2);
  std::vector<Poly<Rat>> rels = {e * e - e, e * u - u, e * v, u * v};
  auto B = std::make_shared<Algebra<Rat>>(std::vector<std::string>{"u", "v", "e"},
                                          std::move(rels), MonomialOrder::degrevlex(),
                                          std::vector<int>{1, 1, 0});
  return GradedExtension<Rat>(A, B, {u, v});
}

}  // namespace nk
