#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "nk/basis_algebra.hpp"

namespace nk {

// Numerical semigroup <a_1, ..., a_k> with gcd(a_i) = 1, so the complement in
// the nonnegative integers is finite.
struct NumericalSemigroup {
  std::vector<int> gens;       // sorted, duplicates and redundancies kept as given
  std::vector<bool> member_;   // membership table, index 0..limit
  int frobenius = -1;          // largest gap; -1 when there are no gaps
  std::vector<int> gaps;

  explicit NumericalSemigroup(std::vector<int> generators) : gens(std::move(generators)) {
    if (gens.empty()) throw std::invalid_argument("semigroup: no generators");
    for (int g : gens)
      if (g < 1) throw std::invalid_argument("semigroup: generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    int g = 0;
    for (int a : gens) g = std::gcd(g, a);
    if (g != 1) throw std::invalid_argument("semigroup: generators must have gcd 1");

    // Grow the table until we have seen gens[0] consecutive members; every
    // later integer is then a member too.
    int limit = gens[0];
    for (;;) {
      member_.assign(limit + 1, false);
      member_[0] = true;
      for (int n = 1; n <= limit; ++n)
        for (int a : gens) {
          if (n - a >= 0 && member_[n - a]) {
            member_[n] = true;
            break;
          }
        }
      int run = 0;
      bool done = false;
      for (int n = 0; n <= limit; ++n) {
        run = member_[n] ? run + 1 : 0;
        if (run >= gens[0]) {
          done = true;
          break;
        }
      }
      if (done) break;
      limit *= 2;
    }
    for (int n = 1; n < static_cast<int>(member_.size()); ++n)
      if (!member_[n]) gaps.push_back(n);
    frobenius = gaps.empty() ? -1 : gaps.back();
  }

  bool contains(int n) const {
    if (n < 0) return false;
    if (n < static_cast<int>(member_.size())) return member_[n];
    return n > frobenius;
  }

  int conductor() const { return frobenius + 1; }
  bool is_all_of_n() const { return gaps.empty(); }

  // Elements <= bound, ascending.
  std::vector<int> elements_upto(int bound) const {
    std::vector<int> out;
    for (int n = 0; n <= bound; ++n)
      if (contains(n)) out.push_back(n);
    return out;
  }
};

inline std::vector<std::string> semigroup_var_names(int k) {
  static const char* letters[] = {"x", "y", "z", "w"};
  std::vector<std::string> v;
  for (int i = 0; i < k; ++i)
    v.push_back(i < 4 ? letters[i] : "x" + std::to_string(i + 1));
  return v;
}

// Defining ideal of the monomial curve t -> (t^{a_1}, ..., t^{a_k}): eliminate
// t from (x_i - t^{a_i}) using a block order with t ahead of the x block.
template <class K>
std::vector<Poly<K>> semigroup_toric_relations(const NumericalSemigroup& S) {
  int k = static_cast<int>(S.gens.size());
  int n = k + 1;  // variable 0 is t
  std::vector<Poly<K>> gens;
  for (int i = 0; i < k; ++i) {
    Mono ta(n, 0);
    ta[0] = S.gens[i];
    Poly<K> p = Poly<K>::variable(n, i + 1) - Poly<K>::monomial(n, ta, K(1));
    gens.push_back(p);
  }
  auto gb = groebner_basis(gens, MonomialOrder::elimination(1));
  std::vector<Poly<K>> out;
  for (const auto& g : gb) {
    bool uses_t = false;
    for (const auto& [m, c] : g.t)
      if (m[0] > 0) uses_t = true;
    if (uses_t) continue;
    Poly<K> q(k);
    for (const auto& [m, c] : g.t) q.t.emplace(Mono(m.begin() + 1, m.end()), c);
    out.push_back(q);
  }
  if (out.empty() && k > 1) throw std::logic_error("toric relations: elimination came up empty");
  return out;
}

// The curve ring as a presented algebra, graded by the semigroup weights.
template <class K>
std::shared_ptr<Algebra<K>> semigroup_algebra(const NumericalSemigroup& S) {
  int k = static_cast<int>(S.gens.size());
  std::vector<int> w(S.gens.begin(), S.gens.end());
  return std::make_shared<Algebra<K>>(semigroup_var_names(k), semigroup_toric_relations<K>(S),
                                      MonomialOrder::degrevlex(), w);
}

// Direct basis description of the same ring truncated at weight <= bound:
// basis t^s for s in S, products adding exponents.
template <class K>
BasisAlgebra<K> semigroup_basis_algebra(const NumericalSemigroup& S, int bound,
                                        std::string name = "") {
  auto elts = S.elements_upto(bound);
  BasisAlgebra<K> B;
  B.trunc = bound;
  B.name = name.empty() ? "curve" : std::move(name);
  std::map<int, int> idx;
  for (size_t i = 0; i < elts.size(); ++i) {
    idx[elts[i]] = static_cast<int>(i);
    B.weight.push_back(elts[i]);
    B.labels.push_back(elts[i] == 0 ? "1" : "t^" + std::to_string(elts[i]));
  }
  int d = B.dim();
  B.mult.assign(d, std::vector<std::vector<std::pair<int, K>>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int s = elts[i] + elts[j];
      if (s > bound) continue;
      B.mult[i][j] = {{idx.at(s), K(1)}};
    }
  return B;
}

}  // namespace nk
