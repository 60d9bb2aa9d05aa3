#include <catch2/catch_amalgamated.hpp>

#include "nk/algebra.hpp"
#include "nk/basis_algebra.hpp"

using namespace nk;
using P = Poly<Rat>;

static std::shared_ptr<Algebra<Rat>> dual_numbers() {
  P rel = P::variable(1, 0).pow(2);
  return std::make_shared<Algebra<Rat>>(std::vector<std::string>{"x"}, std::vector<P>{rel},
                                        MonomialOrder::degrevlex(), std::vector<int>{1});
}

TEST_CASE("standard monomials of a fat point") {
  // Q[x,y]/(x^2, xy, y^2): basis 1, x, y
  int nv = 2;
  std::vector<P> rels = {P::variable(nv, 0).pow(2), P::variable(nv, 0) * P::variable(nv, 1),
                         P::variable(nv, 1).pow(2)};
  auto A = std::make_shared<Algebra<Rat>>(std::vector<std::string>{"x", "y"}, rels,
                                          MonomialOrder::degrevlex(), std::vector<int>{1, 1});
  REQUIRE(A->zero_dim);
  QuotientBasis<Rat> Q(A, std::nullopt);
  REQUIRE(Q.dim() == 3);
  REQUIRE(Q.label(0) == "1");
  REQUIRE(Q.weight == std::vector<int>{0, 1, 1});
  // x*y = 0 in the quotient
  REQUIRE(Q.mul(1, 2).empty());
}

TEST_CASE("weight-truncated basis of a curve-like quotient") {
  // Q[x,y]/(y^2 - x^3) graded with wt x = 2, wt y = 3 (the cusp)
  int nv = 2;
  P rel = P::variable(nv, 1).pow(2) - P::variable(nv, 0).pow(3);
  auto A = std::make_shared<Algebra<Rat>>(std::vector<std::string>{"x", "y"},
                                          std::vector<P>{rel}, MonomialOrder::degrevlex(),
                                          std::vector<int>{2, 3});
  REQUIRE(!A->zero_dim);
  REQUIRE_THROWS(standard_monomials(*A, std::nullopt));
  QuotientBasis<Rat> Q(A, 10);
  // weights present: 0,2,3,4,5,6,7,8,9,10 -> one monomial each
  REQUIRE(Q.dim() == 10);
  std::vector<int> expect = {0, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  REQUIRE(Q.weight == expect);
  REQUIRE_THROWS(Q.mul(9, 9));
}

TEST_CASE("minimal polynomial and nilradical of dual numbers") {
  QuotientBasis<Rat> Q(dual_numbers(), std::nullopt);
  REQUIRE(Q.dim() == 2);
  UPoly<Rat> mu = variable_minimal_polynomial(Q, 0);
  REQUIRE(mu == UPoly<Rat>::from({0, 0, 1}));  // x^2
  auto nil = nilradical_zero_dim(Q);
  REQUIRE(nil.generators.size() == 1);
  QuotientBasis<Rat> Qred(nil.reduced, std::nullopt);
  REQUIRE(Qred.dim() == 1);
}

TEST_CASE("nilradical of a product with a nontrivial etale part") {
  // Q[x]/(x^2 - 1) x Q[y]/(y^3): reduced part has dim 3 (x^2-1 stays, y goes)
  int nv = 2;
  std::vector<P> rels = {P::variable(nv, 0).pow(2) - P::constant(nv, Rat(1)),
                         P::variable(nv, 1).pow(3)};
  auto A = std::make_shared<Algebra<Rat>>(std::vector<std::string>{"x", "y"}, rels);
  QuotientBasis<Rat> Q(A, std::nullopt);
  REQUIRE(Q.dim() == 6);
  auto nil = nilradical_zero_dim(Q);
  REQUIRE(nil.generators.size() == 1);  // y
  QuotientBasis<Rat> Qred(nil.reduced, std::nullopt);
  REQUIRE(Qred.dim() == 2);
  // x^2 - 1 is squarefree so x contributes no generator
  UPoly<Rat> mux = nil.eliminants[0];
  REQUIRE(UPoly<Rat>::gcd(mux, mux.derivative()).deg() == 0);
}

TEST_CASE("structure constants are associative and unital") {
  int nv = 2;
  std::vector<P> rels = {P::variable(nv, 0).pow(2), P::variable(nv, 0) * P::variable(nv, 1),
                         P::variable(nv, 1).pow(2)};
  auto A = std::make_shared<Algebra<Rat>>(std::vector<std::string>{"x", "y"}, rels,
                                          MonomialOrder::degrevlex(), std::vector<int>{1, 1});
  auto Q = std::make_shared<QuotientBasis<Rat>>(A, std::nullopt);
  BasisAlgebra<Rat> B = basis_algebra_from_quotient(*Q, "fat point");
  REQUIRE_NOTHROW(B.check());
  REQUIRE(B.dim() == 3);
}
