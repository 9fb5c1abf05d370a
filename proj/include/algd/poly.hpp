#ifndef ALGD_POLY_HPP
#define ALGD_POLY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "algd/rational.hpp"

namespace algd {

// Graded-lexicographic order on exponent vectors: lower total degree first,
// ties broken lexicographically. Keys inside one Poly share a length.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Exact multivariate polynomial over Rational. Canonical form invariants:
// the variable context is sorted, duplicate-free, and pruned to variables
// that actually occur; no term carries a zero coefficient. Equal polynomials
// are therefore structurally identical, which makes operator== and the
// rendered text reliable identity checks.
class Poly {
public:
  using Terms = std::map<std::vector<int>, Rational, GradedLexLess>;

  Poly() = default;                       // zero
  Poly(const Rational& c);                // NOLINT: implicit constant
  Poly(std::int64_t c) : Poly(Rational(c)) {}
  Poly(int c) : Poly(Rational(c)) {}

  static Poly variable(const std::string& name);
  // Terms keyed against an explicit context; canonicalizes on entry.
  static Poly make(std::vector<std::string> vars, Terms terms);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant().
  Rational constant_value() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // e must be >= 0 unless the value is a nonzero constant.
  Poly pow(int e) const;

  // Zero when the variable is outside the context.
  Poly partial(const std::string& var) const;

  // Every variable of the (pruned) context must be assigned; extra keys are
  // ignored. Throws MissingAssignmentError naming the first unassigned one.
  Rational eval(const std::map<std::string, Rational>& point) const;

  // Simultaneous over the original terms; the replacement may mention var.
  Poly substitute(const std::string& var, const Poly& replacement) const;

  // Renames the mapped variables; unmapped ones keep their names. Throws
  // NameCollisionError if two context variables would end up identical.
  Poly rename(const std::map<std::string, std::string>& mapping) const;

  int total_degree() const;  // -1 for the zero polynomial
  // Per-monomial degree counting only the given variables; the piece of
  // degree d collects every monomial whose count is d.
  std::map<int, Poly> split_by_degree_in(const std::set<std::string>& subset) const;
  bool depends_on(const std::string& var) const;

  // Canonical text: terms in descending graded-lex order, monomials as
  // x^2*y with context-ordered variables, coefficients n or n/d.
  std::string to_string() const;

private:
  std::vector<std::string> vars_;
  Terms terms_;

  void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace algd

#endif
