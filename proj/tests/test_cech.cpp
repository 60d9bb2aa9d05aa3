#include <catch2/catch_amalgamated.hpp>

#include "nk/cech.hpp"

using namespace nk;

TEST_CASE("identity extension is exact in every degree") {
  auto B = std::make_shared<Algebra<Rat>>(std::vector<std::string>{"t"},
                                          std::vector<Poly<Rat>>{}, MonomialOrder::degrevlex(),
                                          std::vector<int>{1});
  GradedExtension<Rat> E(B, B, {Poly<Rat>::variable(1, 0)});
  for (const auto& r : cech_exactness(E, 6)) {
    REQUIRE(r.injective);
    REQUIRE(r.exact);
    REQUIRE(r.dim_a == 1);
    REQUIRE(r.dim_b == 1);
  }
  REQUIRE(module_generation_bound(E, 3, 6) == 0);
}

TEST_CASE("coordinate cross against its normalization: exact up to degree 6") {
  GradedExtension<Rat> E = cross_normalization_extension();
  auto report = cech_exactness(E, 6);
  for (const auto& r : report) {
    CAPTURE(r.degree);
    REQUIRE(r.injective);
    REQUIRE(r.exact);
  }
  // the normalization splits into two lines: two basis elements per degree,
  // and the extra idempotent in degree zero
  REQUIRE(report[0].dim_b == 2);
  for (int d = 1; d <= 6; ++d) {
    REQUIRE(report[d].dim_a == 2);
    REQUIRE(report[d].dim_b == 2);
    REQUIRE(report[d].equalizer == 2);
  }
  // the idempotent separates the two coordinate inclusions
  REQUIRE(report[0].dim_a == 1);
  REQUIRE(report[0].equalizer == 1);

  // generated over the base by 1 and the idempotent, both in degree zero
  REQUIRE(module_generation_bound(E, 3, 6) == 0);
}

TEST_CASE("cusp against its normalization: equalizer recovers the base exactly") {
  GradedExtension<Rat> E = cusp_normalization_extension();
  auto report = cech_exactness(E, 6);

  // frozen dimensions of B (x)_A B = Q[t,t']/(t^2 - t'^2, t^3 - t'^3)
  std::vector<int> bb = {1, 2, 2, 1, 1, 1, 1};
  for (int d = 0; d <= 6; ++d) {
    CAPTURE(d);
    REQUIRE(report[d].dim_bb == bb[d]);
    REQUIRE(report[d].injective);
    // the equalizer equals the image of the base in every degree, including
    // degree 1 where the base is empty and t itself is separated: the
    // complex stays exact even though the base is not seminormal
    REQUIRE(report[d].equalizer == report[d].image);
    REQUIRE(report[d].exact);
  }
  REQUIRE(report[1].dim_b == 1);
  REQUIRE(report[1].equalizer == 0);

  // module-finite with generators 1 and t
  REQUIRE(module_generation_bound(E, 3, 6) == 1);
  REQUIRE_FALSE(module_finite_probe(E, 0, 6));
}

TEST_CASE("a non-finite extension is reported") {
  // Q[x] -> Q[t] sending x to 0 is not module-finite: nothing spans degree 1
  auto A = std::make_shared<Algebra<Rat>>(std::vector<std::string>{"x"},
                                          std::vector<Poly<Rat>>{}, MonomialOrder::degrevlex(),
                                          std::vector<int>{1});
  auto B = std::make_shared<Algebra<Rat>>(std::vector<std::string>{"t"},
                                          std::vector<Poly<Rat>>{}, MonomialOrder::degrevlex(),
                                          std::vector<int>{1});
  GradedExtension<Rat> E(A, B, {Poly<Rat>::zero(1)});
  REQUIRE_THROWS_AS(module_generation_bound(E, 2, 4), std::runtime_error);
}
