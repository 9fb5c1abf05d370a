#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <limits>
#include <map>
#include <random>

#include "algd/error.hpp"
#include "algd/poly.hpp"
#include "algd/rational.hpp"
#include "test_util.hpp"

using algd::Poly;
using algd::Rational;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-3, -9) == Rational(1, 3));
  CHECK(Rational(5, 1).to_string() == "5");
  CHECK(Rational(-7, 3).to_string() == "-7/3");
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(a.inverse() == Rational(3));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational failure modes") {
  CHECK_THROWS_AS(Rational(1, 0), algd::DivisionByZeroError);
  CHECK_THROWS_AS(Rational(0).inverse(), algd::DivisionByZeroError);
  CHECK_THROWS_AS(Rational(0).pow(-1), algd::DivisionByZeroError);
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rational(big) + Rational(1), algd::OverflowError);
  CHECK_THROWS_AS(Rational(big) * Rational(2), algd::OverflowError);
}

TEST_CASE("rational field laws on seeded samples") {
  std::mt19937_64 rng(20240801);
  for (int trial = 0; trial < 300; ++trial) {
    Rational a = testutil::random_rational(rng);
    Rational b = testutil::random_rational(rng);
    Rational c = testutil::random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("poly canonical form") {
  Poly x = Poly::variable("x");
  Poly y = Poly::variable("y");
  CHECK(x + y == y + x);
  CHECK((x - x).is_zero());
  CHECK((x - x).vars().empty());
  CHECK((x + 1) * (x - 1) == x * x - 1);
  CHECK(((x + y) * (x - y)).to_string() == "x^2 - y^2");
  CHECK((y * x).to_string() == "x*y");
  CHECK(((x + 1).pow(2)).to_string() == "x^2 + 2*x + 1");
  CHECK(Poly(0).to_string() == "0");
  CHECK((Poly(2) * x - x - x).is_zero());
}

TEST_CASE("poly ordering in rendered text") {
  Poly x = Poly::variable("x");
  Poly y = Poly::variable("y");
  // Descending graded-lex: higher total degree first, then lex on exponents.
  Poly p = y * y + x * x * x + x * y + Poly(1) + x;
  CHECK(p.to_string() == "x^3 + x*y + y^2 + x + 1");
  Poly q = x * y * Rational(-1, 2) + Poly(Rational(1, 3));
  CHECK(q.to_string() == "-1/2*x*y + 1/3");
}

TEST_CASE("poly calculus helpers") {
  Poly x = Poly::variable("x");
  Poly y = Poly::variable("y");
  Poly p = x.pow(2) * y + y.pow(3);
  CHECK(p.partial("x") == Poly(2) * x * y);
  CHECK(p.partial("y") == x.pow(2) + Poly(3) * y.pow(2));
  CHECK(p.partial("z").is_zero());
  CHECK(p.total_degree() == 3);
  CHECK(Poly(0).total_degree() == -1);
  CHECK(p.depends_on("x"));
  CHECK_FALSE(p.depends_on("z"));
}

TEST_CASE("poly evaluation is exact") {
  Poly x = Poly::variable("x");
  Poly p = (x + 1).pow(3);
  CHECK(p.eval({{"x", Rational(1, 2)}}) == Rational(27, 8));
  CHECK_THROWS_AS(p.eval({}), algd::MissingAssignmentError);
  try {
    Poly q = Poly::variable("a") + Poly::variable("b");
    q.eval({{"a", Rational(1)}});
    CHECK(false);
  } catch (const algd::MissingAssignmentError& e) {
    CHECK(e.variable == "b");
  }
}

TEST_CASE("poly substitution and rename") {
  Poly x = Poly::variable("x");
  Poly y = Poly::variable("y");
  Poly p = x.pow(2) + y;
  CHECK(p.substitute("x", y) == y.pow(2) + y);
  // Simultaneous: the replacement may mention the variable it replaces.
  CHECK((x.pow(2)).substitute("x", x + 1) == (x + 1).pow(2));
  CHECK(p.rename({{"x", "u"}}) == Poly::variable("u").pow(2) + y);
  CHECK_THROWS_AS(p.rename({{"x", "y"}}), algd::NameCollisionError);
}

TEST_CASE("poly degree split") {
  Poly x = Poly::variable("x");
  Poly xi = Poly::variable("xi");
  Poly eta = Poly::variable("eta");
  Poly p = x * xi + xi * eta + x.pow(3);
  auto pieces = p.split_by_degree_in({"xi", "eta"});
  CHECK(pieces[0] == x.pow(3));
  CHECK(pieces[1] == x * xi);
  CHECK(pieces[2] == xi * eta);
}

TEST_CASE("poly pow contract") {
  Poly x = Poly::variable("x");
  CHECK_THROWS_AS(x.pow(-1), algd::DegreeError);
  CHECK(Poly(Rational(2)).pow(-2) == Poly(Rational(1, 4)));
  CHECK(x.pow(0) == Poly(1));
}

TEST_CASE("poly ring laws on seeded samples") {
  std::mt19937_64 rng(20240802);
  const std::vector<std::string> vars{"x", "y"};
  for (int trial = 0; trial < 60; ++trial) {
    Poly a = testutil::random_poly(rng, vars);
    Poly b = testutil::random_poly(rng, vars);
    Poly c = testutil::random_poly(rng, vars);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("poly evaluation respects the ring structure") {
  std::mt19937_64 rng(20240803);
  const std::vector<std::string> vars{"x", "y"};
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = testutil::random_poly(rng, vars);
    Poly b = testutil::random_poly(rng, vars);
    std::map<std::string, Rational> point{
        {"x", testutil::random_rational(rng)},
        {"y", testutil::random_rational(rng)}};
    CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
    CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
  }
}
