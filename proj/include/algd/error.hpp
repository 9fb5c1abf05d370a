#ifndef ALGD_ERROR_HPP
#define ALGD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace algd {

// Root of every failure the library signals on purpose. Callers that want a
// single catch site can take this; the subtypes exist so tests and the CLI can
// react to specific contract violations.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class OverflowError : public Error {
public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
public:
  using Error::Error;
};

// poly_eval with an unassigned variable; carries the variable name.
class MissingAssignmentError : public Error {
public:
  MissingAssignmentError(const std::string& var, const std::string& what)
      : Error(what), variable(var) {}
  std::string variable;
};

class RankMismatchError : public Error {
public:
  using Error::Error;
};

// A graded value used with a structure whose chart does not declare all the
// variables appearing in its coefficients, or whose basis it does not match.
class ContextMismatchError : public Error {
public:
  using Error::Error;
};

class DegreeError : public Error {
public:
  using Error::Error;
};

class InvalidAlgebroidError : public Error {
public:
  using Error::Error;
};

class NotPoissonError : public Error {
public:
  using Error::Error;
};

// from_derivation on a candidate with delta^2 != 0; names the generator.
class SquareNonzeroError : public Error {
public:
  SquareNonzeroError(const std::string& gen, const std::string& what)
      : Error(what), generator(gen) {}
  std::string generator;
};

class HomogeneityError : public Error {
public:
  using Error::Error;
};

// Dual-chart reconstruction hit a bracket with the wrong fiber degree.
class DegreeViolationError : public Error {
public:
  DegreeViolationError(const std::string& bracket, const std::string& what)
      : Error(what), bracket(bracket) {}
  std::string bracket;
};

class NameCollisionError : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  SyntaxError(int line, int column, const std::string& what)
      : Error(what), line(line), column(column) {}
  int line;
  int column;
};

class UnknownIdentifierError : public SyntaxError {
public:
  UnknownIdentifierError(int line, int column, const std::string& name,
                         const std::string& what)
      : SyntaxError(line, column, what), name(name) {}
  std::string name;
};

}  // namespace algd

#endif
