#ifndef ALGD_PARSE_HPP
#define ALGD_PARSE_HPP

#include <map>
#include <string>
#include <vector>

#include "algd/exterior.hpp"
#include "algd/poly.hpp"

namespace algd {

// Evaluated expression: a polynomial scalar, a multivector, or a form.
struct Value {
  enum class Kind { Scalar, Multi, FormVal };
  Kind kind = Kind::Scalar;
  Poly scalar;
  Multivector mv;
  Form form;

  static Value of(Poly p);
  static Value of(Multivector m);
  static Value of(Form f);
};

// Identifier environment for one chart. Coordinates resolve to polynomial
// variables, basis names to degree-1 multivectors, eps1..eps{rank} to basis
// coforms. Bindings come last, so chart names shadow them.
struct SymbolTable {
  std::vector<std::string> scalars;
  std::vector<std::string> basis;  // size 0 or rank
  int rank = 0;
  std::map<std::string, Value> bindings;
};

// Grammar: sum of products; '*' multiplies (wedge on graded values), '^'
// binds tighter and is integer power on scalars, wedge otherwise; both
// associate left. Literals are INT or INT/INT; unary minus sits between
// '*' and '^'. The line number seeds error positions.
Value eval_expression(const std::string& text, const SymbolTable& syms,
                      int line = 1);

// Kind casters; scalars promote to degree 0 where a graded value is wanted.
Poly expect_scalar(const Value& v);
Multivector expect_multivector(const Value& v, int rank);
Form expect_form(const Value& v, int rank);
Section expect_section(const Value& v, int rank);

}  // namespace algd

#endif
