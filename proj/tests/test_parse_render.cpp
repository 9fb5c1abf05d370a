#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "algd/deffile.hpp"
#include "algd/error.hpp"
#include "algd/parse.hpp"
#include "algd/render.hpp"
#include "examples.hpp"
#include "test_util.hpp"

using algd::Form;
using algd::IndexTuple;
using algd::Multivector;
using algd::Poly;
using algd::Rational;
using algd::Section;
using algd::SymbolTable;
using algd::Value;

namespace {

SymbolTable chart_xy_e2() {
  SymbolTable syms;
  syms.scalars = {"x", "y"};
  syms.basis = {"e1", "e2"};
  syms.rank = 2;
  return syms;
}

Poly scalar(const std::string& text, const SymbolTable& syms) {
  return expect_scalar(eval_expression(text, syms));
}

}  // namespace

TEST_CASE("scalar expressions evaluate to canonical polynomials") {
  auto syms = chart_xy_e2();
  Poly x = Poly::variable("x");
  Poly y = Poly::variable("y");
  CHECK(scalar("x^2*y + 1/2", syms) == x * x * y + Poly(Rational(1, 2)));
  CHECK(scalar("-2/5", syms) == Poly(Rational(-2, 5)));
  CHECK(scalar("2^3", syms) == Poly(8));
  CHECK(scalar("2^(-1)", syms) == Poly(Rational(1, 2)));
  CHECK(scalar("(2*x)^3", syms) == x.pow(3) * Poly(8));
  CHECK(scalar("-x^2", syms) == -(x * x));
  CHECK(scalar("1/2*x - 1/2*x", syms).is_zero());
  CHECK(scalar("(x + y)*(x - y)", syms) == x * x - y * y);
}

TEST_CASE("graded expressions wedge and promote as declared") {
  auto syms = chart_xy_e2();
  Value v = eval_expression("x*e1 + e2", syms);
  Section s = expect_section(v, 2);
  CHECK(s.component(1) == Poly::variable("x"));
  CHECK(s.component(2) == Poly(1));

  CHECK(expect_multivector(eval_expression("e1^e1", syms), 2).is_zero());
  Multivector e12 =
      Multivector::make(2, {{IndexTuple{1, 2}, Poly(1)}});
  CHECK(expect_multivector(eval_expression("e1^e2", syms), 2) == e12);
  CHECK(expect_multivector(eval_expression("e2^e1", syms), 2) == -e12);
  CHECK(expect_multivector(eval_expression("e1*e2", syms), 2) == e12);

  Form f = expect_form(eval_expression("y*eps1^eps2", syms), 2);
  CHECK(f.component({1, 2}) == Poly::variable("y"));
  CHECK(expect_form(eval_expression("3", syms), 2).component({}) == Poly(3));
  CHECK(expect_multivector(eval_expression("0", syms), 5).is_zero());
}

TEST_CASE("identifiers resolve chart first, bindings last") {
  auto syms = chart_xy_e2();
  syms.bindings["P"] = Value::of(Poly(7));
  syms.bindings["x"] = Value::of(Poly(99));
  CHECK(scalar("P + 1", syms) == Poly(8));
  // The chart name shadows the binding.
  CHECK(scalar("x", syms) == Poly::variable("x"));
  try {
    eval_expression("q + 1", syms, 7);
    FAIL("expected UnknownIdentifierError");
  } catch (const algd::UnknownIdentifierError& e) {
    CHECK(e.name == "q");
    CHECK(e.line == 7);
    CHECK(e.column == 1);
  }
  // eps indices outside 1..rank are plain unknown identifiers.
  CHECK_THROWS_AS(eval_expression("eps3", syms), algd::UnknownIdentifierError);
  CHECK_THROWS_AS(eval_expression("eps0", syms), algd::UnknownIdentifierError);
  CHECK_THROWS_AS(eval_expression("eps", syms), algd::UnknownIdentifierError);
}

TEST_CASE("malformed expressions fail with positioned errors") {
  auto syms = chart_xy_e2();
  try {
    eval_expression("x / 2", syms);
    FAIL("expected SyntaxError");
  } catch (const algd::SyntaxError& e) {
    CHECK(e.column == 3);
  }
  CHECK_THROWS_AS(eval_expression("2/0", syms), algd::DivisionByZeroError);
  CHECK_THROWS_AS(eval_expression("x^(-1)", syms), algd::DegreeError);
  CHECK_THROWS_AS(eval_expression("x^y", syms), algd::SyntaxError);
  CHECK_THROWS_AS(eval_expression("e1 + eps1", syms), algd::SyntaxError);
  CHECK_THROWS_AS(eval_expression("e1*eps1", syms), algd::SyntaxError);
  CHECK_THROWS_AS(eval_expression("(x", syms), algd::SyntaxError);
  CHECK_THROWS_AS(eval_expression("", syms), algd::SyntaxError);
  CHECK_THROWS_AS(eval_expression("x $ y", syms), algd::SyntaxError);
  CHECK_THROWS_AS(eval_expression("x 3", syms), algd::SyntaxError);
  CHECK_THROWS_AS(eval_expression("99999999999999999999", syms),
                  algd::OverflowError);
}

TEST_CASE("the kind casters promote degree-0 values and reject the rest") {
  auto syms = chart_xy_e2();
  Value mv0 = eval_expression("e1^e1 + 5", syms);
  CHECK(expect_scalar(mv0) == Poly(5));
  CHECK_THROWS_AS(expect_scalar(eval_expression("e1", syms)),
                  algd::DegreeError);
  CHECK_THROWS_AS(expect_multivector(eval_expression("eps1", syms), 2),
                  algd::DegreeError);
  CHECK_THROWS_AS(expect_form(eval_expression("e1", syms), 2),
                  algd::DegreeError);
  CHECK_THROWS_AS(expect_multivector(eval_expression("e1", syms), 3),
                  algd::RankMismatchError);
  CHECK_THROWS_AS(expect_section(eval_expression("e1^e2", syms), 2),
                  algd::DegreeError);
  CHECK(expect_multivector(Value::of(Poly::variable("x")), 4)
            .component({}) == Poly::variable("x"));
}

TEST_CASE("rendered values re-parse to themselves") {
  std::mt19937_64 rng(20240881);
  std::vector<std::string> coords = {"x", "y"};
  std::vector<std::string> basis = {"e1", "e2", "e3"};
  SymbolTable syms;
  syms.scalars = coords;
  syms.basis = basis;
  syms.rank = 3;
  for (int trial = 0; trial < 40; ++trial) {
    auto mv = testutil::random_multivector(rng, 3, coords, {0, 1, 2, 3});
    CHECK(expect_multivector(
              eval_expression(render_multivector(mv, basis), syms), 3) == mv);
    auto f = testutil::random_form(rng, 3, coords, {0, 1, 2});
    CHECK(expect_form(eval_expression(render_form(f), syms), 3) == f);
    auto p = testutil::random_poly(rng, coords);
    CHECK(scalar(p.to_string(), syms) == p);
  }
  CHECK(render_multivector(Multivector::make(3, {}), basis) == "0");
  CHECK(render_form(Form::make(3, {}) ) == "0");
}

TEST_CASE("rendering is canonical on pinned values") {
  std::vector<std::string> basis = {"e1", "e2"};
  Multivector m = Multivector::make(
      2, {{IndexTuple{1}, Poly(Rational(-1))},
          {IndexTuple{1, 2}, Poly::variable("x") + Poly(1)},
          {IndexTuple{2}, Poly::variable("x") * Poly(Rational(1, 2))}});
  CHECK(render_multivector(m, basis) == "-e1 + 1/2*x*e2 + (x + 1)*e1^e2");
  Form f = Form::make(2, {{IndexTuple{}, Poly(3)}, {IndexTuple{2}, Poly(1)}});
  CHECK(render_form(f) == "3 + eps2");
  CHECK(render_value(Value::of(Poly::variable("x")), basis) == "x");
}

TEST_CASE("check reports render one line per residual") {
  auto rep = check_axioms(examples::tampered_anchor());
  std::string text = render_report(rep);
  CHECK(text ==
        "subject: algebroid\n"
        "verdict: invalid\n"
        "identities: anchor-homomorphism, jacobi\n"
        "residual anchor-homomorphism [1,2,1] = -1\n");
  auto j = report_json(rep);
  CHECK(j["verdict"] == "invalid");
  CHECK(j["residuals"].size() == 1);
  CHECK(j["residuals"][0]["identity"] == "anchor-homomorphism");
  CHECK(j["residuals"][0]["location"] == std::vector<int>{1, 2, 1});
  CHECK(j["residuals"][0]["value"] == "-1");

  auto ok = report_json(check_axioms(examples::so3()));
  CHECK(ok["verdict"] == "valid");
  CHECK(ok["residuals"].empty());
}

TEST_CASE("value json carries kind, rank, basis, and components") {
  auto syms = chart_xy_e2();
  auto j = value_json(eval_expression("x*e1 + e2", syms), syms.basis);
  CHECK(j["kind"] == "multivector");
  CHECK(j["rank"] == 2);
  CHECK(j["basis"] == std::vector<std::string>{"e1", "e2"});
  CHECK(j["components"].size() == 2);
  CHECK(j["components"][0]["indices"] == std::vector<int>{1});
  CHECK(j["components"][0]["coefficient"] == "x");
  auto js = value_json(Value::of(Poly(Rational(1, 2))), {});
  CHECK(js["kind"] == "scalar");
  CHECK(js["value"] == "1/2");
  auto jf = value_json(eval_expression("eps1^eps2", syms), syms.basis);
  CHECK(jf["kind"] == "form");
  CHECK(jf["basis"] == std::vector<std::string>{"eps1", "eps2"});
}

TEST_CASE("definition files parse with comments, blanks, and defaults") {
  auto def = algd::parse_definition(
      "# a twisted plane\n"
      "name demo\n"
      "\n"
      "base x y   # chart\n"
      "rank 2 as s1 s2\n"
      "anchor s1 -> x: x^2\n"
      "structure [s1,s2] = s2 + x*s1\n");
  CHECK(def.kind == algd::Definition::Kind::AlgebroidKind);
  CHECK(def.name == "demo");
  REQUIRE(def.algebroid.has_value());
  const auto& A = *def.algebroid;
  CHECK(A.coords() == std::vector<std::string>{"x", "y"});
  CHECK(A.sections() == std::vector<std::string>{"s1", "s2"});
  CHECK(A.anchor_entry(1, 1) == Poly::variable("x") * Poly::variable("x"));
  CHECK(A.anchor_entry(1, 2).is_zero());
  CHECK(A.anchor_entry(2, 1).is_zero());
  CHECK(A.c(1, 2, 1) == Poly::variable("x"));
  CHECK(A.c(1, 2, 2) == Poly(1));
}

TEST_CASE("definition kind is inferred or checked against the directives") {
  auto biv = algd::parse_definition("base x y\nbivector [x,y] = 1\n");
  CHECK(biv.kind == algd::Definition::Kind::PoissonKind);
  CHECK(biv.poisson->entry(1, 2) == Poly(1));
  CHECK(biv.fibers.empty());

  auto fib = algd::parse_definition(
      "base x y\nbivector [x,y] = x\nfibers y\n");
  CHECK(fib.fibers == std::vector<std::string>{"y"});

  auto zero = algd::parse_definition("kind poisson\nbase x y\n");
  CHECK(zero.poisson->as_bivector().is_zero());

  CHECK_THROWS_AS(algd::parse_definition("base x\n"), algd::SyntaxError);
  CHECK_THROWS_AS(
      algd::parse_definition("kind algebroid\nbase x\nbivector [x,x] = 1\n"),
      algd::SyntaxError);
  CHECK_THROWS_AS(
      algd::parse_definition(
          "base x\nrank 1 as s\nbivector [x,x] = 1\n"),
      algd::SyntaxError);
  CHECK_THROWS_AS(algd::parse_definition("kind algebroid\nbase x\n"),
                  algd::SyntaxError);
}

TEST_CASE("definition errors carry the offending line number") {
  auto line_of = [](const std::string& text) {
    try {
      algd::parse_definition(text);
    } catch (const algd::SyntaxError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("base x\nspin 3\n") == 2);
  CHECK(line_of("base x\nbase y\n") == 2);
  CHECK(line_of("base x\nrank one as s\n") == 2);
  CHECK(line_of("base x\nrank 2 as s\n") == 2);
  CHECK(line_of("rank 2 as s1 s2\nstructure [s2,s1] = s1\n") == 2);
  CHECK(line_of("rank 2 as s1 s2\nstructure [s1,s1] = s1\n") == 2);
  CHECK(line_of("rank 2 as s1 s2\nstructure [s1,s3] = s1\n") == 2);
  CHECK(line_of("rank 2 as s1 s2\n"
                "structure [s1,s2] = s1\n"
                "structure [s1,s2] = s2\n") == 3);
  CHECK(line_of("base x\nrank 1 as s\nanchor s -> q: x\n") == 3);
  CHECK(line_of("base x\nrank 1 as s\n"
                "anchor s -> x: 1\nanchor s -> x: x\n") == 4);
  CHECK(line_of("base x y\nbivector [y,x] = 1\n") == 2);
  CHECK(line_of("base x y\nbivector [x,y] = 1\nfibers q\n") == 3);
  CHECK(line_of("base x y\nbivector [x,y] = 1\nfibers y y\n") == 3);
  // Expression errors surface the definition line they sit on.
  try {
    algd::parse_definition("base x\nrank 1 as s\n\nanchor s -> x: q\n");
    FAIL("expected UnknownIdentifierError");
  } catch (const algd::UnknownIdentifierError& e) {
    CHECK(e.name == "q");
    CHECK(e.line == 4);
  }
  CHECK_THROWS_AS(
      algd::parse_definition("rank 2 as s1 s2\nstructure [s1,s2] = s1^s2\n"),
      algd::DegreeError);
}

TEST_CASE("rendered definitions parse back to the same structure") {
  for (const auto& [name, A] : examples::library()) {
    INFO(name);
    auto def = algd::parse_definition(algd::render_definition(A, name));
    CHECK(def.kind == algd::Definition::Kind::AlgebroidKind);
    CHECK(def.name == name);
    REQUIRE(def.algebroid.has_value());
    CHECK(*def.algebroid == A);
  }
  for (const auto& [name, L] : examples::poisson_library()) {
    INFO(name);
    auto def = algd::parse_definition(algd::render_definition(L, name));
    CHECK(def.kind == algd::Definition::Kind::PoissonKind);
    REQUIRE(def.poisson.has_value());
    CHECK(*def.poisson == L);
  }
  auto dual = dual_poisson(examples::so3());
  auto def = algd::parse_definition(
      algd::render_definition(dual, "so3dual", examples::so3().sections()));
  CHECK(*def.poisson == dual);
  CHECK(def.fibers == examples::so3().sections());
}

TEST_CASE("load_definition reads files and rejects missing paths") {
  auto def = algd::load_definition(std::string(ALGD_DATA_DIR) + "/so3.alg");
  CHECK(def.kind == algd::Definition::Kind::AlgebroidKind);
  REQUIRE(def.algebroid.has_value());
  CHECK(*def.algebroid == examples::so3());
  CHECK_THROWS_AS(algd::load_definition("/nonexistent/nowhere.alg"),
                  algd::Error);
}
