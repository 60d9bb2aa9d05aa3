#include <catch2/catch_amalgamated.hpp>

#include "nk/builtin.hpp"
#include "nk/differentials.hpp"
#include "nk/kunneth.hpp"

using namespace nk;

TEST_CASE("coefficient extension preserves the multiplication table") {
  for (auto& E : artinian_corpus()) {
    auto B = to_rational_functions(*E.basis);
    B->check();
    REQUIRE(B->dim() == E.basis->dim());
  }
}

TEST_CASE("Hochschild dimensions are stable under flat base change") {
  struct Case {
    std::string name;
    int nmax;
  };
  for (auto& [name, nmax] : std::vector<Case>{{"dual-numbers", 3}, {"fat-point", 2}}) {
    auto E = artinian_by_name(name);
    auto over_q = hochschild_dims<Rat>(E.basis, 0, nmax);
    auto over_f = hochschild_dims<RatFun>(to_rational_functions(*E.basis), 0, nmax);
    CAPTURE(name);
    REQUIRE(over_f == over_q);
  }
}

TEST_CASE("dual numbers over the function field, relative to Q") {
  auto E = artinian_by_name("dual-numbers");
  auto hhF = hochschild_dims<RatFun>(to_rational_functions(*E.basis), 0, 3);
  auto rel_q = ground_field_shift(hhF);
  REQUIRE(rel_q == std::vector<int>{2, 3, 2, 2});
}

TEST_CASE("algebras defined honestly over Q(u): split and non-split points") {
  RatFun u = RatFun::u();

  // F[x]/(x^2 - u) is a quadratic field extension: smooth, no higher homology
  auto sq = std::make_shared<Algebra<RatFun>>(
      std::vector<std::string>{"x"},
      std::vector<Poly<RatFun>>{Poly<RatFun>::monomial(1, {2}, RatFun(1)) -
                                Poly<RatFun>::constant(1, u)});
  auto qb_sq = std::make_shared<QuotientBasis<RatFun>>(sq, std::nullopt);
  REQUIRE(qb_sq->basis.size() == 2);
  auto B_sq = std::make_shared<BasisAlgebra<RatFun>>(basis_algebra_from_quotient(*qb_sq));
  auto hh_sq = hochschild_dims<RatFun>(B_sq, 0, 2);
  REQUIRE(hh_sq == std::vector<int>{2, 0, 0});

  // F[x]/((x - u)^2) is a square-zero thickening of a moving point
  auto xm = Poly<RatFun>::variable(1, 0) - Poly<RatFun>::constant(1, u);
  auto th = std::make_shared<Algebra<RatFun>>(std::vector<std::string>{"x"},
                                              std::vector<Poly<RatFun>>{xm * xm});
  auto qb_th = std::make_shared<QuotientBasis<RatFun>>(th, std::nullopt);
  auto B_th = std::make_shared<BasisAlgebra<RatFun>>(basis_algebra_from_quotient(*qb_th));
  auto hh_th = hochschild_dims<RatFun>(B_th, 0, 3);
  REQUIRE(hh_th == std::vector<int>{2, 1, 1, 1});

  // nilradical of the thickening is generated by x - u, detected exactly
  auto nil = nilradical_zero_dim(*qb_th);
  REQUIRE_FALSE(nil.already_reduced);
  QuotientBasis<RatFun> qb_red(nil.reduced, std::nullopt);
  REQUIRE(qb_red.basis.size() == 1);

  // and the smooth one really is reduced
  REQUIRE(nilradical_zero_dim(*qb_sq).already_reduced);
}

TEST_CASE("Kaehler differentials work over the function field") {
  RatFun u = RatFun::u();
  auto xm = Poly<RatFun>::variable(1, 0) - Poly<RatFun>::constant(1, u);
  auto th = std::make_shared<Algebra<RatFun>>(std::vector<std::string>{"x"},
                                              std::vector<Poly<RatFun>>{xm * xm});
  auto qb = std::make_shared<QuotientBasis<RatFun>>(th, std::nullopt);
  KaehlerModule<RatFun> O1(qb, 1);
  REQUIRE(O1.dim(0) == 1);
}
