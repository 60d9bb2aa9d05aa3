#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nk/groebner.hpp"
#include "nk/matrix.hpp"
#include "nk/upoly.hpp"

namespace nk {

// Finitely presented commutative algebra K[x_1..x_n]/I.  The basis is computed
// once at construction; instances are immutable afterwards.
template <class K>
struct Algebra {
  std::vector<std::string> vars;
  std::vector<Poly<K>> relations;
  MonomialOrder ord;
  std::vector<int> weights;  // empty: ungraded
  std::vector<Poly<K>> gb;
  bool zero_dim = false;

  Algebra(std::vector<std::string> vars_, std::vector<Poly<K>> rels,
          MonomialOrder o = MonomialOrder::degrevlex(), std::vector<int> w = {})
      : vars(std::move(vars_)), relations(std::move(rels)), ord(o), weights(std::move(w)) {
    for (const auto& r : relations)
      if (r.nvars != nvars()) throw std::invalid_argument("Algebra: relation arity mismatch");
    if (!weights.empty()) {
      if (static_cast<int>(weights.size()) != nvars())
        throw std::invalid_argument("Algebra: weight vector arity mismatch");
      for (int wi : weights)
        if (wi < 0) throw std::invalid_argument("Algebra: negative weight");
      for (const auto& r : relations)
        if (!r.is_zero_p() && !r.homogeneous_weight(weights))
          throw std::invalid_argument("Algebra: relation not weight-homogeneous: " + r.str(vars));
    }
    gb = groebner_basis(relations, ord);
    zero_dim = compute_zero_dim();
  }

  int nvars() const { return static_cast<int>(vars.size()); }
  bool graded() const { return !weights.empty(); }

  Poly<K> nf(const Poly<K>& p) const { return normal_form(p, gb, ord); }

  bool is_unit_ideal() const {
    return gb.size() == 1 && gb[0].t.size() == 1 && mono_is_one(gb[0].t.begin()->first);
  }

  int weight_of(const Mono& m) const {
    return weights.empty() ? 0 : mono_wdeg(m, weights);
  }

 private:
  bool compute_zero_dim() const {
    if (is_unit_ideal()) return true;
    for (int i = 0; i < nvars(); ++i) {
      bool found = false;
      for (const auto& g : gb) {
        Mono lt = g.leading(ord).first;
        bool pure = lt[i] > 0;
        for (int j = 0; j < nvars() && pure; ++j)
          if (j != i && lt[j] > 0) pure = false;
        if (pure) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }
};

// Monomials outside the leading-term ideal.  Without a weight bound the ideal
// must be zero-dimensional; with one, the algebra must be graded and the walk
// stays below the bound.  `cap` guards against weight-zero directions in which
// the quotient is not finite-dimensional.
template <class K>
std::vector<Mono> standard_monomials(const Algebra<K>& A, std::optional<int> weight_bound,
                                     size_t cap = 2000000) {
  if (!weight_bound && !A.zero_dim)
    throw std::invalid_argument(
        "standard_monomials: ideal is not zero-dimensional; a weight bound is required");
  if (weight_bound && !A.graded())
    throw std::invalid_argument("standard_monomials: weight bound requires a graded algebra");
  if (A.is_unit_ideal()) return {};

  std::vector<Mono> lts;
  for (const auto& g : A.gb) lts.push_back(g.leading(A.ord).first);
  auto is_standard = [&](const Mono& m) {
    for (const auto& lt : lts)
      if (mono_divides(lt, m)) return false;
    return true;
  };

  std::set<Mono> seen;
  std::vector<Mono> queue{Mono(A.nvars(), 0)};
  seen.insert(queue[0]);
  size_t head = 0;
  while (head < queue.size()) {
    Mono m = queue[head++];
    for (int i = 0; i < A.nvars(); ++i) {
      Mono m2 = m;
      m2[i] += 1;
      if (weight_bound && A.weight_of(m2) > *weight_bound) continue;
      if (seen.count(m2) || !is_standard(m2)) continue;
      seen.insert(m2);
      queue.push_back(m2);
      if (queue.size() > cap)
        throw std::runtime_error("standard_monomials: basis cap exceeded (dimension guard)");
    }
  }
  std::sort(queue.begin(), queue.end(), [&](const Mono& a, const Mono& b) {
    int wa = A.weight_of(a), wb = A.weight_of(b);
    if (wa != wb) return wa < wb;
    return A.ord.less(a, b);
  });
  return queue;
}

// A finite-dimensional slice of an Algebra: the standard monomials (all of
// them, or those of weight <= trunc) with exact structure constants.  Products
// whose weight exceeds the bound are not stored and must not be queried.
template <class K>
struct QuotientBasis {
  std::shared_ptr<const Algebra<K>> A;
  std::optional<int> trunc;
  std::vector<Mono> basis;
  std::map<Mono, int> index;
  std::vector<int> weight;
  int unit = -1;
  std::vector<std::vector<std::vector<std::pair<int, K>>>> mult;

  QuotientBasis() = default;
  QuotientBasis(std::shared_ptr<const Algebra<K>> alg, std::optional<int> weight_bound,
                size_t cap = 2000000)
      : A(std::move(alg)), trunc(weight_bound) {
    basis = standard_monomials(*A, weight_bound, cap);
    for (size_t i = 0; i < basis.size(); ++i) {
      index.emplace(basis[i], static_cast<int>(i));
      weight.push_back(A->weight_of(basis[i]));
      if (mono_is_one(basis[i])) unit = static_cast<int>(i);
    }
    if (unit != 0)
      throw std::logic_error("QuotientBasis: expected the unit monomial at index 0");
    mult.assign(dim(), std::vector<std::vector<std::pair<int, K>>>(dim()));
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        if (trunc && weight[i] + weight[j] > *trunc) continue;
        Poly<K> p = A->nf(Poly<K>::monomial(A->nvars(), mono_mul(basis[i], basis[j]), K(1)));
        mult[i][j] = expand_nf(p);
      }
  }

  int dim() const { return static_cast<int>(basis.size()); }

  std::string label(int i) const {
    return Poly<K>::monomial(A->nvars(), basis[i], K(1)).str(A->vars);
  }

  // Expand an already normal-form polynomial in the basis.
  std::vector<std::pair<int, K>> expand_nf(const Poly<K>& p) const {
    std::vector<std::pair<int, K>> v;
    for (const auto& [m, c] : p.t) {
      auto it = index.find(m);
      if (it == index.end())
        throw std::logic_error("QuotientBasis: monomial outside basis (weight overflow?)");
      v.emplace_back(it->second, c);
    }
    return v;
  }

  std::vector<std::pair<int, K>> expand(const Poly<K>& p) const { return expand_nf(A->nf(p)); }

  const std::vector<std::pair<int, K>>& mul(int i, int j) const {
    if (trunc && weight[i] + weight[j] > *trunc)
      throw std::logic_error("QuotientBasis::mul: product exceeds weight truncation");
    return mult[i][j];
  }

  // Matrix of multiplication by v (sparse coordinates) on the whole slice.
  // Only valid untruncated, or when the caller knows products stay in bounds.
  Mat<K> mult_matrix(const std::vector<std::pair<int, K>>& v) const {
    Mat<K> M(dim(), dim());
    for (int j = 0; j < dim(); ++j)
      for (const auto& [i, c] : v)
        for (const auto& [k, c2] : mul(i, j)) M.at(k, j) += c * c2;
    return M;
  }

  Mat<K> mult_matrix_poly(const Poly<K>& p) const { return mult_matrix(expand(p)); }
};

// Minimal polynomial of the image of x_i in a finite-dimensional quotient.
template <class K>
UPoly<K> variable_minimal_polynomial(const QuotientBasis<K>& Q, int var) {
  if (Q.trunc) throw std::invalid_argument("minimal polynomial needs the full quotient");
  int n = Q.dim();
  std::vector<std::vector<K>> pows;
  Poly<K> xi = Poly<K>::variable(Q.A->nvars(), var);
  Poly<K> p = Poly<K>::constant(Q.A->nvars(), K(1));
  for (int k = 0; k <= n; ++k) {
    auto sparse = Q.expand(p);
    std::vector<K> dense(n, K(0));
    for (const auto& [i, c] : sparse) dense[i] = c;
    LinSolver<K> solver(Mat<K>::from_cols(n, pows));
    if (!pows.empty()) {
      auto sol = solver.solve(dense);
      if (sol) {
        UPoly<K> mu;
        mu.c.assign(k + 1, K(0));
        mu.c[k] = K(1);
        for (int j = 0; j < k; ++j) mu.c[j] = -(*sol)[j];
        mu.trim();
        return mu;
      }
    }
    pows.push_back(dense);
    p = Q.A->nf(p * xi);
  }
  throw std::logic_error("variable_minimal_polynomial: no dependence found");
}

template <class K>
struct NilradicalResult {
  std::vector<Poly<K>> generators;          // squarefree eliminants, the nonzero ones
  std::vector<UPoly<K>> eliminants;         // minimal polynomial per variable
  std::shared_ptr<Algebra<K>> reduced;      // A / nil(A)
  bool already_reduced = false;
};

// Zero-dimensional nilradical via squarefree parts of the variable eliminants.
// Works over any field of characteristic zero carried by K.
template <class K>
NilradicalResult<K> nilradical_zero_dim(const QuotientBasis<K>& Q) {
  const Algebra<K>& A = *Q.A;
  if (!A.zero_dim)
    throw std::invalid_argument("nilradical_zero_dim: ideal is not zero-dimensional");
  NilradicalResult<K> res;
  std::vector<Poly<K>> new_rels = A.relations;
  for (int i = 0; i < A.nvars(); ++i) {
    UPoly<K> mu = variable_minimal_polynomial(Q, i);
    res.eliminants.push_back(mu);
    UPoly<K> g = UPoly<K>::gcd(mu, mu.derivative());
    if (g.deg() == 0) continue;  // already squarefree
    UPoly<K> q, r;
    UPoly<K>::divmod(mu, g, q, r);
    q = q.monic();
    // q(x_i) as a multivariate polynomial.
    Poly<K> gen(A.nvars());
    Poly<K> xi = Poly<K>::variable(A.nvars(), i);
    for (int d = 0; d <= q.deg(); ++d)
      if (!is_zero(q.coeff(d))) gen = gen + q.coeff(d) * xi.pow(d);
    gen = A.nf(gen);
    if (!gen.is_zero_p()) {
      res.generators.push_back(gen);
      new_rels.push_back(gen);
    }
  }
  res.already_reduced = res.generators.empty();
  // Keep the grading when every added generator is homogeneous for it.
  std::vector<int> w = A.weights;
  if (!w.empty())
    for (const auto& g : res.generators)
      if (!g.homogeneous_weight(w)) {
        w.clear();
        break;
      }
  res.reduced = std::make_shared<Algebra<K>>(A.vars, new_rels, A.ord, w);

  // Sanity: generators are nilpotent and the quotient has squarefree eliminants.
  QuotientBasis<K> Qred(res.reduced, std::nullopt);
  for (const auto& g : res.generators) {
    Mat<K> M = Q.mult_matrix_poly(g);
    Mat<K> P = Mat<K>::identity(Q.dim());
    for (int k = 0; k < Q.dim(); ++k) P = P * M;
    if (!P.is_zero_mat())
      throw std::logic_error("nilradical_zero_dim: generator is not nilpotent");
  }
  for (int i = 0; i < A.nvars(); ++i) {
    UPoly<K> mu = variable_minimal_polynomial(Qred, i);
    if (UPoly<K>::gcd(mu, mu.derivative()).deg() != 0)
      throw std::logic_error("nilradical_zero_dim: quotient is not reduced");
  }
  return res;
}

}  // namespace nk
