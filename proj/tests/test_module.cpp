#include <catch2/catch_amalgamated.hpp>

#include "nk/module.hpp"
#include "nk/semigroup.hpp"

using namespace nk;
using P = Poly<Rat>;

TEST_CASE("free module weight spaces over a curve ring") {
  NumericalSemigroup S({2, 3});
  auto A = semigroup_algebra<Rat>(S);
  auto Q = std::make_shared<QuotientBasis<Rat>>(A, 12);
  // free module on one generator of weight 0: dims = indicator of S
  PresentedModule<Rat> F(Q, {0}, {"e"}, {});
  REQUIRE(F.dim(0) == 1);
  REQUIRE(F.dim(1) == 0);
  REQUIRE(F.dim(2) == 1);
  REQUIRE(F.dim(7) == 1);
  // generator of weight 3 shifts the grading
  PresentedModule<Rat> F3(Q, {3}, {"e"}, {});
  REQUIRE(F3.dim(3) == 1);
  REQUIRE(F3.dim(4) == 0);
  REQUIRE(F3.dim(5) == 1);
}

TEST_CASE("presented module with one relation") {
  // R = Q[x,y]/(y^2 - x^3) with wt x=2, y=3; module R e1 + R e2 with relation
  // x e1 - y e2 = 0, wt e1 = 3, wt e2 = 2 (relation homogeneous of weight 5).
  NumericalSemigroup S({2, 3});
  auto A = semigroup_algebra<Rat>(S);
  auto Q = std::make_shared<QuotientBasis<Rat>>(A, 12);
  auto x = Q->expand(P::variable(2, 0));
  auto y = Q->expand(P::variable(2, 1));
  std::vector<std::vector<std::pair<int, Rat>>> row = {x, {{y[0].first, -y[0].second}}};
  PresentedModule<Rat> M(Q, {3, 2}, {"e1", "e2"}, {row});
  // weight 5: ambient x e1, y e2 (dim 2), one relation -> dim 1
  REQUIRE(M.dim(5) == 1);
  // the two ambient vectors are identified up to the relation
  auto c1 = M.coords(5, {{{0, x[0].first}, Rat(1)}});
  auto c2 = M.coords(5, {{{1, y[0].first}, Rat(1)}});
  REQUIRE(c1 == c2);
}

TEST_CASE("relation homogeneity is enforced") {
  NumericalSemigroup S({2, 3});
  auto A = semigroup_algebra<Rat>(S);
  auto Q = std::make_shared<QuotientBasis<Rat>>(A, 8);
  auto x = Q->expand(P::variable(2, 0));
  auto y = Q->expand(P::variable(2, 1));
  // x e - y e is not homogeneous for wt e = 0
  std::vector<std::vector<std::pair<int, Rat>>> row = {
      {{x[0].first, Rat(1)}, {y[0].first, Rat(-1)}}};
  // flatten into a single generator entry
  std::vector<std::vector<std::pair<int, Rat>>> bad = {
      {{x[0].first, Rat(1)}}};
  bad[0].push_back({y[0].first, Rat(-1)});
  REQUIRE_THROWS(PresentedModule<Rat>(Q, {0}, {"e"}, {bad}));
}

TEST_CASE("multiplication maps and saturation torsion") {
  // M = R/(x) over the cusp ring: x e = 0, y e = 0 would be weight 3; use just x.
  NumericalSemigroup S({2, 3});
  auto A = semigroup_algebra<Rat>(S);
  auto Q = std::make_shared<QuotientBasis<Rat>>(A, 16);
  auto x = Q->expand(P::variable(2, 0));
  PresentedModule<Rat> M(Q, {0}, {"e"}, {{x}});
  // R/(x) has basis 1, y (weights 0 and 3)
  REQUIRE(M.dim(0) == 1);
  REQUIRE(M.dim(2) == 0);
  REQUIRE(M.dim(3) == 1);
  REQUIRE(M.dim(5) == 0);
  REQUIRE(M.dim(6) == 0);
  // everything is x-torsion
  REQUIRE(saturation_torsion_dim(M, 0, x, 2) == 1);
  REQUIRE(saturation_torsion_dim(M, 3, x, 2) == 1);
  // the free module has no torsion
  PresentedModule<Rat> F(Q, {0}, {"e"}, {});
  REQUIRE(saturation_torsion_dim(F, 0, x, 2) == 0);
  REQUIRE(saturation_torsion_dim(F, 2, x, 2) == 0);
}

TEST_CASE("transport computes an induced map") {
  // multiplication by y as a transported map on the free module
  NumericalSemigroup S({2, 3});
  auto A = semigroup_algebra<Rat>(S);
  auto Q = std::make_shared<QuotientBasis<Rat>>(A, 12);
  auto y = Q->expand(P::variable(2, 1));
  PresentedModule<Rat> F(Q, {0}, {"e"}, {});
  Mat<Rat> m1 = mult_map(F, 2, y, 3);  // t^2 -> t^5
  REQUIRE(m1.rows == 1);
  REQUIRE(m1.cols == 1);
  REQUIRE(m1.at(0, 0) == Rat(1));
  Mat<Rat> m0 = mult_map(F, 1, y, 3);  // 0 -> t^4
  REQUIRE(m0.cols == 0);
}
