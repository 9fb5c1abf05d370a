#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algd/error.hpp"
#include "algd/exterior.hpp"
#include "test_util.hpp"

using algd::Form;
using algd::IndexTuple;
using algd::Multivector;
using algd::Poly;
using algd::Rational;
using algd::Section;

namespace {

Multivector basis_mv(int rank, IndexTuple t) {
  return Multivector::make(rank, {{std::move(t), Poly(1)}});
}

Form basis_form(int rank, IndexTuple t) {
  return Form::make(rank, {{std::move(t), Poly(1)}});
}

}  // namespace

TEST_CASE("wedge on generators") {
  auto e1 = basis_mv(3, {1});
  auto e2 = basis_mv(3, {2});
  auto e3 = basis_mv(3, {3});
  CHECK(wedge(e1, e1).is_zero());
  CHECK(wedge(e1, e2) == -wedge(e2, e1));
  CHECK(wedge(e2, e1).component({1, 2}) == Poly(-1));
  // e1 ^ e3 ^ e2 picks up one transposition.
  CHECK(wedge(wedge(e1, e3), e2).component({1, 2, 3}) == Poly(-1));
  CHECK(wedge(wedge(e1, e2), e3).component({1, 2, 3}) == Poly(1));
}

TEST_CASE("wedge with degree-0 parts multiplies") {
  Poly x = Poly::variable("x");
  auto scalar = Multivector::make(2, {{IndexTuple{}, x}});
  auto e1 = basis_mv(2, {1});
  CHECK(wedge(scalar, e1) == e1.scaled(x));
  CHECK(wedge(e1, scalar) == e1.scaled(x));
}

TEST_CASE("wedge associativity and graded commutativity on seeded samples") {
  std::mt19937_64 rng(20240811);
  const std::vector<std::string> vars{"x", "y"};
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testutil::random_multivector(rng, 4, vars, {0, 1, 2});
    auto b = testutil::random_multivector(rng, 4, vars, {1, 2});
    auto c = testutil::random_multivector(rng, 4, vars, {0, 1});
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, b + c) == wedge(a, b) + wedge(a, c));
  }
  for (int trial = 0; trial < 30; ++trial) {
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q) {
        auto a = testutil::random_multivector(rng, 4, vars, {p});
        auto b = testutil::random_multivector(rng, 4, vars, {q});
        auto lhs = wedge(a, b);
        auto rhs = wedge(b, a);
        if ((p * q) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("tuple component validation") {
  CHECK_THROWS_AS(Multivector::make(2, {{IndexTuple{2, 1}, Poly(1)}}),
                  algd::DegreeError);
  CHECK_THROWS_AS(Multivector::make(2, {{IndexTuple{1, 1}, Poly(1)}}),
                  algd::DegreeError);
  CHECK_THROWS_AS(Multivector::make(2, {{IndexTuple{3}, Poly(1)}}),
                  algd::DegreeError);
  CHECK_THROWS_AS(wedge(basis_mv(2, {1}), basis_mv(3, {1})),
                  algd::RankMismatchError);
}

TEST_CASE("pairing is the Kronecker pairing on the increasing basis") {
  for (int rank : {2, 3, 4}) {
    for (int d = 0; d <= rank; ++d) {
      auto tuples = algd::index_tuples(rank, d);
      for (const auto& t : tuples)
        for (const auto& u : tuples) {
          Poly expected = (t == u) ? Poly(1) : Poly(0);
          CHECK(pairing(basis_form(rank, t), basis_mv(rank, u)) == expected);
        }
    }
  }
  CHECK(pairing(basis_form(3, {1}), basis_mv(3, {1, 2})).is_zero());
}

TEST_CASE("interior product on generators") {
  auto eps12 = basis_form(3, {1, 2});
  CHECK(interior(basis_mv(3, {1}), eps12) == basis_form(3, {2}));
  CHECK(interior(basis_mv(3, {2}), eps12) == -basis_form(3, {1}));
  CHECK(interior(basis_mv(3, {3}), eps12).is_zero());
  // Composite insertions act rightmost first.
  CHECK(interior(basis_mv(3, {1, 2}), eps12) ==
        Form::make(3, {{IndexTuple{}, Poly(-1)}}));
}

TEST_CASE("interior at equal degree matches the signed pairing") {
  std::mt19937_64 rng(20240812);
  const std::vector<std::string> vars{"x"};
  for (int p = 1; p <= 3; ++p) {
    for (int trial = 0; trial < 12; ++trial) {
      auto P = testutil::random_multivector(rng, 4, vars, {p});
      auto eta = testutil::random_form(rng, 4, vars, {p});
      int sign = ((p * (p - 1) / 2) % 2 == 0) ? 1 : -1;
      Poly expected = pairing(eta, P) * Rational(sign);
      CHECK(interior(P, eta) == Form::make(4, {{IndexTuple{}, expected}}));
    }
  }
}

TEST_CASE("interior is adjoint to wedge against the pairing") {
  std::mt19937_64 rng(20240813);
  const std::vector<std::string> vars{"x", "y"};
  for (int trial = 0; trial < 20; ++trial) {
    auto P = testutil::random_multivector(rng, 4, vars, {1});
    auto Q = testutil::random_multivector(rng, 4, vars, {2});
    auto eta = testutil::random_form(rng, 4, vars, {3});
    // <eta, P ^ Q> = <i(P) eta, Q> for a degree-1 insertion on the left.
    CHECK(pairing(eta, wedge(P, Q)) == pairing(interior(P, eta), Q));
  }
}

TEST_CASE("graded commutator bracket of wedge operators") {
  // F = eps1 ^ ., G = eps2 ^ . are both odd, so [F, G] = FG + GF = 0 on
  // everything, while [F, F] = 2 F^2 = 0 as well.
  auto F = [](const Form& eta) { return wedge(basis_form(3, {1}), eta); };
  auto G = [](const Form& eta) { return wedge(basis_form(3, {2}), eta); };
  auto eta = basis_form(3, {3});
  CHECK(algd::graded_commutator_apply(F, 1, G, 1, eta).is_zero());
  CHECK(algd::graded_commutator_apply(F, 1, F, 1, eta).is_zero());
  // Odd against even uses the minus sign.
  auto S = [](const Form& eta) { return eta.scaled(Poly(3)); };
  CHECK(algd::graded_commutator_apply(F, 1, S, 0, eta).is_zero());
}

TEST_CASE("section wrapper validates degree") {
  CHECK_THROWS_AS(Section(basis_mv(2, {1, 2})), algd::DegreeError);
  CHECK_THROWS_AS(Section(Multivector::make(2, {{IndexTuple{}, Poly(1)}})),
                  algd::DegreeError);
  Section s(2, {Poly(1), Poly::variable("x")});
  CHECK(s.component(1) == Poly(1));
  CHECK(s.component(2) == Poly::variable("x"));
  CHECK(Section(2, {Poly(0), Poly(0)}).is_zero());
}

TEST_CASE("index tuple enumeration") {
  CHECK(algd::index_tuples(4, 2).size() == 6);
  CHECK(algd::index_tuples(3, 0).size() == 1);
  CHECK(algd::index_tuples(3, 3) ==
        std::vector<IndexTuple>{IndexTuple{1, 2, 3}});
  CHECK(algd::index_tuples(2, 3).empty());
}

TEST_CASE("mixed-degree values expose parts and degrees") {
  Poly x = Poly::variable("x");
  auto v = Multivector::make(3, {{IndexTuple{}, x}, {IndexTuple{1, 2}, Poly(2)}});
  CHECK(v.degrees() == std::vector<int>{0, 2});
  CHECK(v.part(0).component({}) == x);
  CHECK(v.part(2).component({1, 2}) == Poly(2));
  CHECK(v.part(1).is_zero());
  CHECK_FALSE(v.is_homogeneous(0));
  CHECK(v.part(2).is_homogeneous(2));
}
