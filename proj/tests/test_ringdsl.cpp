#include <catch2/catch_amalgamated.hpp>

#include "nk/ringdsl.hpp"

using namespace nk;
using P = Poly<Rat>;

TEST_CASE("parse the cusp description") {
  auto D = parse_ring("ring Q[x,y] / (y^2 - x^3) weights x=2 y=3");
  REQUIRE(D.vars == std::vector<std::string>{"x", "y"});
  REQUIRE(D.weights == std::vector<int>{2, 3});
  REQUIRE(D.relations.size() == 1);
  P x = P::variable(2, 0), y = P::variable(2, 1);
  REQUIRE(D.relations[0] == y.pow(2) - x.pow(3));

  auto A = ring_from_text("ring Q[x,y] / (y^2 - x^3) weights x=2 y=3");
  REQUIRE(A->graded());
  REQUIRE_FALSE(A->zero_dim);
}

TEST_CASE("parse zero-dimensional and free rings") {
  auto A = ring_from_text("ring Q[x] / (x^2)");
  REQUIRE(A->zero_dim);
  REQUIRE(A->nvars() == 1);

  auto B = ring_from_text("ring Q[x,y]");
  REQUIRE(B->relations.empty());
  REQUIRE_FALSE(B->zero_dim);

  auto C = ring_from_text("ring Q[x,y] / (x^2, x y, y^2)");
  REQUIRE(C->zero_dim);
  REQUIRE(C->relations.size() == 3);
}

TEST_CASE("operator precedence and implicit multiplication") {
  P x = P::variable(3, 0), y = P::variable(3, 1), z = P::variable(3, 2);
  auto D = parse_ring("ring Q[x,y,z] / (x + y*z^2, 2x - 6, (x+y)^2, -x^2 + y)");
  REQUIRE(D.relations[0] == x + y * z.pow(2));
  REQUIRE(D.relations[1] == Rat(2) * x - P::constant(3, Rat(6)));
  REQUIRE(D.relations[2] == x.pow(2) + Rat(2) * x * y + y.pow(2));
  REQUIRE(D.relations[3] == y - x.pow(2));
}

TEST_CASE("parse errors carry byte positions") {
  auto pos_of = [](const std::string& src) -> long {
    try {
      parse_ring(src);
    } catch (const ParseError& e) {
      return static_cast<long>(e.pos);
    }
    return -1;
  };
  REQUIRE(pos_of("rng Q[x]") == 0);
  REQUIRE(pos_of("ring R[x]") == 5);
  REQUIRE(pos_of("ring Q[x] / (x^^2)") == 15);
  REQUIRE(pos_of("ring Q[x,y] / (x*z)") == 17);
  REQUIRE(pos_of("ring Q[x] / (x^2") == 16);   // unexpected end of input
  REQUIRE(pos_of("ring Q[x] / (x$2)") == 14);  // bad character
  REQUIRE(pos_of("ring Q[x,x]") == 9);         // duplicate variable
  REQUIRE(pos_of("ring Q[x] weights y=1") == 18);
  REQUIRE(pos_of("ring Q[x,y] / (x y) weights x=1") == 20);  // y has no weight
  REQUIRE(pos_of("ring Q[x] / (x^2) junk") == 18);
  REQUIRE(pos_of("ring Q[x] / (x^2)") == -1);  // no error
}

TEST_CASE("non-homogeneous relations with weights are rejected downstream") {
  REQUIRE_THROWS_AS(ring_from_text("ring Q[x,y] / (y^2 - x^3) weights x=1 y=1"),
                    std::invalid_argument);
}
