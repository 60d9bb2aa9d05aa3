#include <catch2/catch_amalgamated.hpp>

#include "nk/nk_table.hpp"

using namespace nk;

TEST_CASE("dual numbers: full table and the two independent routes agree") {
  auto E = artinian_by_name("dual-numbers");
  auto T = artinian_nk_table<Rat>(E.qb, E.basis, 4);

  REQUIRE(T.total == std::vector<int>{0, 1, 1, 1, 1});
  REQUIRE(T.fiber == T.total);

  // the nonzero cells walk up the staircase
  REQUIRE(T.tk[1][1] == 1);
  REQUIRE(T.tk[2][2] == 1);
  REQUIRE(T.tk[3][2] == 1);
  REQUIRE(T.tk[4][3] == 1);
  int nonzero = 0;
  for (auto& row : T.tk)
    for (int v : row) nonzero += (v != 0);
  REQUIRE(nonzero == 4);
}

TEST_CASE("truncated cubic: table matches the nilpotent fiber route") {
  auto E = artinian_by_name("truncated-cubic");
  auto T = artinian_nk_table<Rat>(E.qb, E.basis, 4);
  REQUIRE(T.total == std::vector<int>{0, 2, 2, 2, 2});
  REQUIRE(T.fiber == T.total);
  REQUIRE(T.tk[1][1] == 2);
  REQUIRE(T.tk[2][2] == 2);
  REQUIRE(T.tk[3][2] == 2);
  REQUIRE(T.tk[4][3] == 2);
}

TEST_CASE("fat point: table matches the nilpotent fiber route") {
  auto E = artinian_by_name("fat-point");
  auto T = artinian_nk_table<Rat>(E.qb, E.basis, 4);
  REQUIRE(T.fiber == T.total);
  REQUIRE(T.total[0] == 0);
  REQUIRE(T.tk[1][1] == 2);  // kernel of A -> A_red
  REQUIRE(T.tk[1][2] == 0);
  REQUIRE(T.tk[2][2] == 3);  // all one-forms die in the reduced ring
  REQUIRE(T.tk[3][3] == 1);  // the two-form survives into the kernel
}

TEST_CASE("etale double point: everything vanishes") {
  auto E = artinian_by_name("etale2");
  auto T = artinian_nk_table<Rat>(E.qb, E.basis, 4);
  REQUIRE(T.total == std::vector<int>{0, 0, 0, 0, 0});
  REQUIRE(T.fiber == T.total);
  for (auto& row : T.tk)
    for (int v : row) REQUIRE(v == 0);
}

TEST_CASE("cusp curve table: gaps, units, and torsion in the right weights") {
  auto T = curve_nk_table<Rat>(NumericalSemigroup({2, 3}), 3, 12);
  REQUIRE(T.gaps == std::vector<int>{1});

  // n = 0: one class per gap weight
  REQUIRE(T.total[0] == 1);
  REQUIRE(T.tk[0][1][1] == 1);

  // n = 1: the normalization is injective on functions but not surjective on
  // one-forms in weight 1
  REQUIRE(T.total[1] == 1);
  REQUIRE(T.tk[1][2][1] == 1);
  for (int w = 0; w <= 12; ++w) REQUIRE(T.tk[1][1][w] == 0);

  // n = 2: the torsion of the one-forms, in weights 5 and 7
  REQUIRE(T.total[2] == 2);
  REQUIRE(T.tk[2][2][5] == 1);
  REQUIRE(T.tk[2][2][7] == 1);

  // n = 3 includes the full two-form weights 5 and 7
  REQUIRE(T.tk[3][3][5] == 1);
  REQUIRE(T.tk[3][3][7] == 1);
}

TEST_CASE("curve tables for <3,4,5> and <2,5>: gap counts and weight placement") {
  auto T1 = curve_nk_table<Rat>(NumericalSemigroup({3, 4, 5}), 2, 12);
  REQUIRE(T1.gaps == std::vector<int>{1, 2});
  REQUIRE(T1.total[0] == 2);
  REQUIRE(T1.tk[0][1][1] == 1);
  REQUIRE(T1.tk[0][1][2] == 1);
  REQUIRE(T1.total[1] == 2);
  REQUIRE(T1.tk[1][2][1] == 1);
  REQUIRE(T1.tk[1][2][2] == 1);

  auto T2 = curve_nk_table<Rat>(NumericalSemigroup({2, 5}), 2, 12);
  REQUIRE(T2.gaps == std::vector<int>{1, 3});
  REQUIRE(T2.total[0] == 2);
  REQUIRE(T2.tk[0][1][1] == 1);
  REQUIRE(T2.tk[0][1][3] == 1);
  REQUIRE(T2.total[1] == 2);
  REQUIRE(T2.tk[1][2][1] == 1);
  REQUIRE(T2.tk[1][2][3] == 1);
}

TEST_CASE("iterated N-operations on K: recursion equals closed form") {
  auto T = curve_nk_table<Rat>(NumericalSemigroup({2, 3}), 3, 12);
  TkTotalFn tk = [&](int n) -> long long {
    return (n >= 0 && n <= T.nmax) ? T.total[n] : 0;
  };
  for (int p = 1; p <= 3; ++p)
    for (int n = 0; n <= 3; ++n)
      for (int J = 0; J <= 5; ++J) {
        CAPTURE(p, n, J);
        REQUIRE(np_k_recursive(tk, p, n, J) == np_k_closed(tk, p, n, J));
      }
}

TEST_CASE("second N-operation vanishes exactly when two consecutive groups do") {
  std::vector<std::vector<int>> totals;
  for (auto& E : artinian_corpus())
    totals.push_back(artinian_nk_table<Rat>(E.qb, E.basis, 3).total);
  for (auto gens : std::vector<std::vector<int>>{{2, 3}, {3, 4, 5}, {2, 5}})
    totals.push_back(curve_nk_table<Rat>(NumericalSemigroup(gens), 3, 12).total);

  bool saw_nonvanishing = false;
  for (const auto& tot : totals) {
    TkTotalFn tk = [&](int n) -> long long {
      return (n >= 0 && n < static_cast<int>(tot.size())) ? tot[n] : 0;
    };
    for (int n = 1; n <= 3; ++n) {
      bool lhs = n2k_vanishes(tk, n);
      bool rhs = (tk(n) == 0 && tk(n - 1) == 0);
      CAPTURE(tot, n);
      REQUIRE(lhs == rhs);
      if (!lhs) saw_nonvanishing = true;
    }
  }
  REQUIRE(saw_nonvanishing);

  // the cusp at n = 1 is the canonical nonvanishing witness: NK_0 and NK_1
  // both live, so the second N-operation cannot die
  auto C = curve_nk_table<Rat>(NumericalSemigroup({2, 3}), 1, 12);
  TkTotalFn tk = [&](int n) -> long long {
    return (n >= 0 && n <= 1) ? C.total[n] : 0;
  };
  REQUIRE(np_k_closed(tk, 2, 1, 2) == 2);
  REQUIRE_FALSE(n2k_vanishes(tk, 1));
}

TEST_CASE("tables render as readable staircases") {
  auto E = artinian_by_name("dual-numbers");
  auto T = artinian_nk_table<Rat>(E.qb, E.basis, 3);
  std::string s = render_tk_table(T.ring, T.tk, T.total);
  REQUIRE(s.find("TK table") != std::string::npos);
  REQUIRE(s.find("total") != std::string::npos);

  auto C = curve_nk_table<Rat>(NumericalSemigroup({2, 3}), 2, 8);
  std::string cs = render_curve_table(C);
  REQUIRE(cs.find("w=5") != std::string::npos);
}

TEST_CASE("branch names follow the staircase") {
  REQUIRE(tk_branch_name(3, 1) == "hochschild");
  REQUIRE(tk_branch_name(3, 2) == "hochschild");
  REQUIRE(tk_branch_name(3, 3) == "forms-kernel");
  REQUIRE(tk_branch_name(3, 4) == "forms-cokernel");
  REQUIRE(tk_branch_name(3, 5) == "zero");
  REQUIRE(tk_branch_name(3, 0) == "zero");
  REQUIRE(tk_branch_name(0, 1) == "forms-cokernel");
  REQUIRE(tk_branch_name(-1, 1) == "zero");
}

TEST_CASE("bass report verdicts") {
  // smooth line: everything vanishes
  auto L = curve_nk_table<Rat>(NumericalSemigroup({1}), 2, 8);
  TkTotalFn ltk = [&](int n) -> long long {
    return (n >= 0 && n <= 2) ? L.total[n] : 0;
  };
  auto r0 = bass_report(ltk, -2, 2, 0);
  REQUIRE(r0.nk_n_zero);
  REQUIRE(r0.nk_prev_zero);
  REQUIRE(r0.n2k_zero);
  REQUIRE(r0.k_regular_range);
  REQUIRE(r0.biconditional_ok);
  REQUIRE(r0.verdict.find("consistent") != std::string::npos);
  REQUIRE(r0.verdict.find("K_0-regular") != std::string::npos);

  // dual numbers at n = 1: NK_1 lives, NK_0 dies
  auto E = artinian_by_name("dual-numbers");
  auto T = artinian_nk_table<Rat>(E.qb, E.basis, 3);
  TkTotalFn dtk = [&](int n) -> long long {
    return (n >= 0 && n <= 3) ? T.total[n] : 0;
  };
  auto r1 = bass_report(dtk, -2, 3, 1);
  REQUIRE_FALSE(r1.nk_n_zero);
  REQUIRE(r1.nk_prev_zero);
  REQUIRE_FALSE(r1.n2k_zero);
  REQUIRE(r1.n2k_j2 == 1);  // C(1,1) * (TK_1 + TK_0) = 1
  REQUIRE_FALSE(r1.k_regular_range);
  REQUIRE(r1.biconditional_ok);
  REQUIRE(r1.verdict.find("not K_1-regular") != std::string::npos);

  // cusp at n = 1: both NK_1 and NK_0 live
  auto C = curve_nk_table<Rat>(NumericalSemigroup({2, 3}), 3, 12);
  TkTotalFn ctk = [&](int n) -> long long {
    return (n >= 0 && n <= 3) ? C.total[n] : 0;
  };
  auto r2 = bass_report(ctk, -2, 3, 1);
  REQUIRE_FALSE(r2.nk_n_zero);
  REQUIRE_FALSE(r2.nk_prev_zero);
  REQUIRE_FALSE(r2.n2k_zero);
  REQUIRE(r2.n2k_j2 == 2);
  REQUIRE(r2.biconditional_ok);

  // range guard
  REQUIRE_THROWS_AS(bass_report(ctk, 1, 3, 1), std::invalid_argument);
}

TEST_CASE("fiber cohomology re-indexes the totals") {
  // cusp: H^1 counts the gaps, matching the normalization quotient
  auto C = curve_nk_table<Rat>(NumericalSemigroup({2, 3}), 3, 12);
  TkTotalFn ctk = [&](int n) -> long long {
    return (n >= 0 && n <= 3) ? C.total[n] : 0;
  };
  auto H = fiber_cohomology_dims(ctk, 3);
  REQUIRE(H.at(1) == 1);   // = #gaps = dim of Q[t]/R
  REQUIRE(H.at(0) == 1);   // = TK_1
  REQUIRE(H.at(-1) == 2);  // = TK_2
  REQUIRE(H.at(-2) == 2);  // = TK_3

  // Artinian: H^{-n} = dim HH_n for n >= 1 (nilpotent maximal ideal)
  for (auto& E : artinian_corpus()) {
    auto T = artinian_nk_table<Rat>(E.qb, E.basis, 4);
    TkTotalFn tk = [&](int n) -> long long {
      return (n >= 0 && n <= 4) ? T.total[n] : 0;
    };
    auto HF = fiber_cohomology_dims(tk, 4);
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(E.name, n);
      REQUIRE(HF.at(-n) == T.hh[n]);
    }
  }
}
