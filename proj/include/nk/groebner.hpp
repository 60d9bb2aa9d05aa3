#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "nk/poly.hpp"

namespace nk {

// Remainder of p on division by G: no term of the result is divisible by any
// leading term of G.  Reduces the order-largest reducible term first.
template <class K>
Poly<K> normal_form(Poly<K> p, const std::vector<Poly<K>>& G, const MonomialOrder& ord) {
  if (G.empty()) return p;
  std::vector<std::pair<Mono, K>> lts;
  lts.reserve(G.size());
  for (const auto& g : G) lts.push_back(g.leading(ord));
  while (true) {
    // Largest term divisible by some leading term.
    const Mono* best = nullptr;
    int which = -1;
    for (const auto& [m, c] : p.t) {
      for (size_t i = 0; i < lts.size(); ++i) {
        if (!mono_divides(lts[i].first, m)) continue;
        if (!best || ord.greater(m, *best)) {
          best = &m;
          which = static_cast<int>(i);
        }
        break;
      }
    }
    if (!best) return p;
    Mono q = mono_div(*best, lts[which].first);
    K f = p.t.at(*best) / lts[which].second;
    p = p - G[which].mul_mono(q, f);
  }
}

template <class K>
Poly<K> s_poly(const Poly<K>& f, const Poly<K>& g, const MonomialOrder& ord) {
  auto [mf, cf] = f.leading(ord);
  auto [mg, cg] = g.leading(ord);
  Mono l = mono_lcm(mf, mg);
  return f.mul_mono(mono_div(l, mf), K(1) / cf) - g.mul_mono(mono_div(l, mg), K(1) / cg);
}

// Buchberger with the product and chain criteria and normal pair selection.
// Returns the reduced basis: monic, pairwise tail-reduced, sorted by leading
// term.  Deterministic for a given input order.
template <class K>
std::vector<Poly<K>> groebner_basis(const std::vector<Poly<K>>& gens, const MonomialOrder& ord,
                                    size_t step_cap = 200000) {
  std::vector<Poly<K>> G;
  for (const auto& g : gens)
    if (!g.is_zero_p()) {
      auto [m, c] = g.leading(ord);
      G.push_back((K(1) / c) * g);
    }
  if (G.empty()) return G;

  struct Pair {
    int i, j;
    Mono lcm;
  };
  auto lt = [&](int i) { return G[i].leading(ord).first; };
  std::vector<Pair> pending;
  std::set<std::pair<int, int>> handled;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) pending.push_back({i, j, mono_lcm(lt(i), lt(j))});
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

  size_t steps = 0;
  while (!pending.empty()) {
    if (++steps > step_cap)
      throw std::runtime_error("groebner_basis: step cap exceeded");
    // Normal strategy: smallest lcm w.r.t. the order.
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k)
      if (ord.less(pending[k].lcm, pending[best].lcm)) best = k;
    Pair pr = pending[best];
    pending.erase(pending.begin() + best);
    handled.insert({pr.i, pr.j});

    Mono li = lt(pr.i), lj = lt(pr.j);
    // Product criterion.
    if (mono_mul(li, lj) == pr.lcm) continue;
    // Chain criterion.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!mono_divides(lt(k), pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (handled.count({key1.first, key1.second}) && handled.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    Poly<K> r = normal_form(s_poly(G[pr.i], G[pr.j], ord), G, ord);
    if (r.is_zero_p()) continue;
    auto [m, c] = r.leading(ord);
    G.push_back((K(1) / c) * r);
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  // Minimalize: drop elements whose leading term another one divides.
  std::vector<Poly<K>> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    Mono mi = G[i].leading(ord).first;
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      Mono mj = G[j].leading(ord).first;
      if (mono_divides(mj, mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Full reduction.
  std::vector<Poly<K>> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<K>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly<K> r = normal_form(minimal[i], others, ord);
    if (!r.is_zero_p()) {
      auto [m, c] = r.leading(ord);
      reduced.push_back((K(1) / c) * r);
    }
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
    return ord.less(a.leading(ord).first, b.leading(ord).first);
  });
  return reduced;
}

template <class K>
bool in_ideal(const Poly<K>& p, const std::vector<Poly<K>>& gb, const MonomialOrder& ord) {
  return normal_form(p, gb, ord).is_zero_p();
}

}  // namespace nk
