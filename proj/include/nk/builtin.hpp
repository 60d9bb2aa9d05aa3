#pragma once

#include <memory>
#include <string>

#include "nk/basis_algebra.hpp"
#include "nk/semigroup.hpp"

namespace nk {

// Named example rings used across tests and the command line tool.

struct ArtinianExample {
  std::string name;
  std::shared_ptr<Algebra<Rat>> alg;
  std::shared_ptr<QuotientBasis<Rat>> qb;
  std::shared_ptr<BasisAlgebra<Rat>> basis;
};

inline ArtinianExample make_artinian(std::string name, std::vector<std::string> vars,
                                     std::vector<Poly<Rat>> rels) {
  ArtinianExample E;
  E.name = std::move(name);
  E.alg = std::make_shared<Algebra<Rat>>(std::move(vars), std::move(rels));
  if (!E.alg->zero_dim) throw std::invalid_argument("make_artinian: not finite dimensional");
  E.qb = std::make_shared<QuotientBasis<Rat>>(E.alg, std::nullopt);
  E.basis = std::make_shared<BasisAlgebra<Rat>>(basis_algebra_from_quotient(*E.qb, E.name));
  return E;
}

// Q[x]/(x^2)
inline ArtinianExample artinian_dual_numbers() {
  Poly<Rat> x = Poly<Rat>::variable(1, 0);
  return make_artinian("dual-numbers", {"x"}, {x.pow(2)});
}

// Q[x]/(x^3)
inline ArtinianExample artinian_truncated_cubic() {
  Poly<Rat> x = Poly<Rat>::variable(1, 0);
  return make_artinian("truncated-cubic", {"x"}, {x.pow(3)});
}

// Q[x,y]/(x^2, xy, y^2)
inline ArtinianExample artinian_fat_point() {
  Poly<Rat> x = Poly<Rat>::variable(2, 0), y = Poly<Rat>::variable(2, 1);
  return make_artinian("fat-point", {"x", "y"}, {x.pow(2), x * y, y.pow(2)});
}

// Q[x]/(x^2 - 1), the split etale double point
inline ArtinianExample artinian_etale2() {
  Poly<Rat> x = Poly<Rat>::variable(1, 0);
  return make_artinian("etale2", {"x"}, {x.pow(2) - Poly<Rat>::constant(1, Rat(1))});
}

inline std::vector<ArtinianExample> artinian_corpus() {
  return {artinian_dual_numbers(), artinian_truncated_cubic(), artinian_fat_point(),
          artinian_etale2()};
}

inline ArtinianExample artinian_by_name(const std::string& name) {
  for (auto& e : artinian_corpus())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown builtin ring: " + name);
}

inline std::shared_ptr<BasisAlgebra<Rat>> builtin_dual_numbers() {
  return artinian_dual_numbers().basis;
}
inline std::shared_ptr<BasisAlgebra<Rat>> builtin_truncated_cubic() {
  return artinian_truncated_cubic().basis;
}
inline std::shared_ptr<BasisAlgebra<Rat>> builtin_fat_point() {
  return artinian_fat_point().basis;
}
inline std::shared_ptr<BasisAlgebra<Rat>> builtin_etale2() {
  return artinian_etale2().basis;
}

// Q[x,y]/(xy) with x, y of weight 1: two coordinate lines crossing.  Not a
// semigroup ring (not a domain); x + y is a homogeneous nonzerodivisor.
inline std::shared_ptr<Algebra<Rat>> cross_algebra() {
  Poly<Rat> x = Poly<Rat>::variable(2, 0), y = Poly<Rat>::variable(2, 1);
  return std::make_shared<Algebra<Rat>>(std::vector<std::string>{"x", "y"},
                                        std::vector<Poly<Rat>>{x * y},
                                        MonomialOrder::degrevlex(), std::vector<int>{1, 1});
}

}  // namespace nk
