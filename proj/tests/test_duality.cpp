#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "algd/duality.hpp"
#include "algd/error.hpp"
#include "examples.hpp"
#include "test_util.hpp"

using algd::Algebroid;
using algd::DualChart;
using algd::Poly;
using algd::PoissonStructure;
using algd::Section;

TEST_CASE("dual chart lists base then fiber names") {
  auto chart = dual_chart(examples::so3());
  CHECK(chart.base.empty());
  CHECK(chart.fiber == std::vector<std::string>{"s1", "s2", "s3"});
  auto chart2 = dual_chart(examples::rank1_x());
  CHECK(chart2.all() == std::vector<std::string>{"x", "s"});
}

TEST_CASE("dual of the compact structure is the linear bracket on momenta") {
  auto L = dual_poisson(examples::so3());
  CHECK(L.coords() == std::vector<std::string>{"s1", "s2", "s3"});
  CHECK(L.entry(1, 2) == Poly::variable("s3"));
  CHECK(L.entry(1, 3) == -Poly::variable("s2"));
  CHECK(L.entry(2, 3) == Poly::variable("s1"));
}

TEST_CASE("dual of a tangent algebroid is the canonical cotangent bracket") {
  auto L = dual_poisson(examples::tangent(2));
  CHECK(L.coords() == std::vector<std::string>{"x1", "x2", "e1", "e2"});
  CHECK(L.entry(1, 3) == Poly(-1));
  CHECK(L.entry(2, 4) == Poly(-1));
  CHECK(L.entry(1, 4).is_zero());
  CHECK(L.entry(2, 3).is_zero());
  CHECK(L.entry(1, 2).is_zero());
  CHECK(L.entry(3, 4).is_zero());
}

TEST_CASE("dual structures pass the Poisson and homogeneity gates") {
  for (const auto& [name, A] : examples::library()) {
    INFO(name);
    auto L = dual_poisson(A);
    CHECK(is_poisson(L).valid);
    auto rep = euler_homogeneity_check(L, dual_chart(A).fiber);
    CHECK(rep.valid);
    CHECK(rep.subject == "poisson");
    REQUIRE(rep.identities.size() == 1);
    CHECK(rep.identities[0] == "euler-homogeneity");
  }
}

TEST_CASE("dual construction round trips through the reconstruction") {
  for (const auto& [name, A] : examples::library()) {
    INFO(name);
    CHECK(algebroid_from_dual_poisson(dual_poisson(A), dual_chart(A)) == A);
  }
}

TEST_CASE("vertical functions represent sections faithfully") {
  std::mt19937_64 rng(20240861);
  for (const auto& [name, A] :
       {std::pair{std::string("so3"), examples::so3()},
        std::pair{std::string("cot_darboux2"),
                  algd::cotangent_algebroid(examples::darboux2())},
        std::pair{std::string("rank1_x"), examples::rank1_x()}}) {
    INFO(name);
    auto L = dual_poisson(A);
    for (int trial = 0; trial < 15; ++trial) {
      Section X = testutil::random_section(rng, A.rank(), A.coords());
      Section Y = testutil::random_section(rng, A.rank(), A.coords());
      Poly phiX = vertical_function(A, X).value();
      Poly phiY = vertical_function(A, Y).value();
      // {Phi_X, Phi_Y} = Phi_{X,Y}.
      CHECK(poisson_bracket(L, phiX, phiY) ==
            vertical_function(A, bracket_sections(A, X, Y)).value());
      // {Phi_X, g o pi} = (rho(X) g) o pi.
      Poly g = testutil::random_poly(rng, A.coords());
      CHECK(poisson_bracket(L, phiX, g) == lie_scalar(A, X, g));
    }
  }
}

TEST_CASE("vertical function construction enforces fiber linearity") {
  auto A = examples::rank1_x();
  auto chart = dual_chart(A);
  Poly s = Poly::variable("s");
  Poly x = Poly::variable("x");
  CHECK(algd::VerticalFunction(chart, x * s).value() == x * s);
  CHECK_THROWS_AS(algd::VerticalFunction(chart, s * s), algd::DegreeError);
  CHECK_THROWS_AS(algd::VerticalFunction(chart, x), algd::DegreeError);
  CHECK_THROWS_AS(algd::VerticalFunction(chart, Poly::variable("q")),
                  algd::ContextMismatchError);
  CHECK_THROWS_AS(
      vertical_function(A, Section(2, {Poly(1), Poly(0)})),
      algd::RankMismatchError);
}

TEST_CASE("the axiom gate guards the dual construction") {
  CHECK_THROWS_AS(dual_poisson(examples::tampered_so3()),
                  algd::InvalidAlgebroidError);
  CHECK_THROWS_AS(dual_poisson(examples::tampered_anchor()),
                  algd::InvalidAlgebroidError);
}

TEST_CASE("a tampered linear bracket fails the Poisson gate but still reads back") {
  // Dual-shaped structure of the tampered compact example, built by hand.
  Poly s1 = Poly::variable("s1");
  Poly s2 = Poly::variable("s2");
  Poly s3 = Poly::variable("s3");
  PoissonStructure L({"s1", "s2", "s3"},
                     {{{1, 2}, s1 + s2 + Poly(2) * s3},
                      {{1, 3}, s1 + s2 + s3},
                      {{2, 3}, s1 + s2 + s3}});
  CHECK_FALSE(is_poisson(L).valid);
  DualChart chart{{}, {"s1", "s2", "s3"}};
  Algebroid back = algebroid_from_dual_poisson(L, chart);
  CHECK(back == examples::tampered_so3());
  CHECK_FALSE(check_axioms(back).valid);
}

TEST_CASE("reconstruction rejects brackets of the wrong fiber degree") {
  Poly xi = Poly::variable("xi");
  try {
    algebroid_from_dual_poisson(
        PoissonStructure({"x", "y", "xi"}, {{{1, 2}, Poly(1)}}),
        DualChart{{"x", "y"}, {"xi"}});
    FAIL("expected DegreeViolationError");
  } catch (const algd::DegreeViolationError& e) {
    CHECK(e.bracket == "{x,y}");
  }
  try {
    algebroid_from_dual_poisson(
        PoissonStructure({"x", "xi"}, {{{1, 2}, xi}}),
        DualChart{{"x"}, {"xi"}});
    FAIL("expected DegreeViolationError");
  } catch (const algd::DegreeViolationError& e) {
    CHECK(e.bracket == "{xi,x}");
  }
  try {
    algebroid_from_dual_poisson(
        PoissonStructure({"xi1", "xi2"},
                         {{{1, 2}, Poly(1) + Poly::variable("xi1")}}),
        DualChart{{}, {"xi1", "xi2"}});
    FAIL("expected DegreeViolationError");
  } catch (const algd::DegreeViolationError& e) {
    CHECK(e.bracket == "{xi1,xi2}");
  }
}

TEST_CASE("reconstruction validates the chart split") {
  auto L = dual_poisson(examples::rank1_x());
  CHECK_THROWS_AS(algebroid_from_dual_poisson(L, DualChart{{"x"}, {}}),
                  algd::RankMismatchError);
  CHECK_THROWS_AS(algebroid_from_dual_poisson(L, DualChart{{"x"}, {"t"}}),
                  algd::ContextMismatchError);
  CHECK_THROWS_AS(algebroid_from_dual_poisson(L, DualChart{{"x"}, {"x"}}),
                  algd::ContextMismatchError);
}

TEST_CASE("the Euler check pins the failure of a non-linear bivector") {
  auto rep = euler_homogeneity_check(examples::darboux2(), {"x", "y"});
  CHECK_FALSE(rep.valid);
  REQUIRE(rep.residuals.size() == 1);
  CHECK(rep.residuals[0].identity == "euler-homogeneity");
  CHECK(rep.residuals[0].location == std::vector<int>{1, 2});
  CHECK(rep.residuals[0].value == "1");
  CHECK_THROWS_AS(euler_homogeneity_check(examples::darboux2(), {"q"}),
                  algd::ContextMismatchError);
}

TEST_CASE("the transpose of the anchor is a Poisson map for valid structures") {
  for (const auto& [name, A] : examples::library()) {
    INFO(name);
    auto rep = transpose_anchor_check(A);
    CHECK(rep.valid);
    CHECK(rep.subject == "algebroid");
    REQUIRE(rep.identities.size() == 1);
    CHECK(rep.identities[0] == "anchor-transpose");
  }
}

TEST_CASE("a broken anchor homomorphism surfaces in the transpose check") {
  auto rep = transpose_anchor_check(examples::tampered_anchor());
  CHECK_FALSE(rep.valid);
  REQUIRE(rep.residuals.size() == 1);
  CHECK(rep.residuals[0].identity == "anchor-transpose");
  // Chart order (x1, x2, s1, s2): the momentum pair is (3, 4).
  CHECK(rep.residuals[0].location == std::vector<int>{3, 4});
  CHECK(rep.residuals[0].value == "-e1");
}
