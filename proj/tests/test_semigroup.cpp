#include <catch2/catch_amalgamated.hpp>

#include "nk/semigroup.hpp"

using namespace nk;

// Brute-force membership: n is a nonnegative combination of the generators.
static bool brute_member(const std::vector<int>& gens, int n) {
  std::vector<bool> dp(n + 1, false);
  dp[0] = true;
  for (int k = 1; k <= n; ++k)
    for (int a : gens)
      if (k - a >= 0 && dp[k - a]) dp[k] = true;
  return dp[n];
}

TEST_CASE("gap sets match brute force") {
  struct Row {
    std::vector<int> gens;
    std::vector<int> gaps;
    int frob;
  };
  std::vector<Row> rows = {
      {{2, 3}, {1}, 1},
      {{3, 4, 5}, {1, 2}, 2},
      {{2, 5}, {1, 3}, 3},
      {{3, 5}, {1, 2, 4, 7}, 7},
      {{1}, {}, -1},
  };
  for (const auto& r : rows) {
    NumericalSemigroup S(r.gens);
    CHECK(S.gaps == r.gaps);
    CHECK(S.frobenius == r.frob);
    for (int n = 0; n <= std::max(0, r.frob) + 10; ++n)
      CHECK(S.contains(n) == brute_member(r.gens, n));
  }
}

TEST_CASE("invalid generator sets are rejected") {
  REQUIRE_THROWS(NumericalSemigroup({2, 4}));
  REQUIRE_THROWS(NumericalSemigroup({0, 3}));
  REQUIRE_THROWS(NumericalSemigroup({}));
}

TEST_CASE("toric ideal of the cusp is (y^2 - x^3)") {
  NumericalSemigroup S({2, 3});
  auto rels = semigroup_toric_relations<Rat>(S);
  REQUIRE(rels.size() == 1);
  Poly<Rat> expect = Poly<Rat>::variable(2, 1).pow(2) - Poly<Rat>::variable(2, 0).pow(3);
  // compare up to sign/scale by checking both directions of membership
  auto ord = MonomialOrder::degrevlex();
  auto gb = groebner_basis<Rat>(rels, ord);
  REQUIRE(in_ideal(expect, gb, ord));
  auto gb2 = groebner_basis<Rat>({expect}, ord);
  REQUIRE(in_ideal(rels[0], gb2, ord));
}

TEST_CASE("presented algebra and direct basis agree on dimensions") {
  for (auto gens : std::vector<std::vector<int>>{{2, 3}, {3, 4, 5}, {2, 5}}) {
    NumericalSemigroup S(gens);
    auto A = semigroup_algebra<Rat>(S);
    int bound = 14;
    QuotientBasis<Rat> Q(A, bound);
    BasisAlgebra<Rat> direct = semigroup_basis_algebra<Rat>(S, bound);
    REQUIRE_NOTHROW(direct.check());
    // per-weight dimensions coincide: 1 if w in S else 0
    std::map<int, int> qc, dc;
    for (int w : Q.weight) qc[w]++;
    for (int w : direct.weight) dc[w]++;
    REQUIRE(qc == dc);
    for (int w = 0; w <= bound; ++w) {
      int expect = S.contains(w) ? 1 : 0;
      REQUIRE((qc.count(w) ? qc[w] : 0) == expect);
    }
  }
}

TEST_CASE("structure constants of the direct model multiply exponents") {
  NumericalSemigroup S({3, 4, 5});
  auto B = semigroup_basis_algebra<Rat>(S, 12);
  // find indices of t^3 and t^4
  auto find = [&](int w) {
    for (int i = 0; i < B.dim(); ++i)
      if (B.weight[i] == w) return i;
    return -1;
  };
  int i3 = find(3), i4 = find(4), i7 = find(7);
  REQUIRE(i3 >= 0);
  auto v = B.mul(i3, i4);
  REQUIRE(v.size() == 1);
  REQUIRE(v[0].first == i7);
  REQUIRE(is_one(v[0].second));
}
