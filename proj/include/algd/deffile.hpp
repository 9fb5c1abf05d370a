#ifndef ALGD_DEFFILE_HPP
#define ALGD_DEFFILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "algd/duality.hpp"
#include "algd/poisson.hpp"

namespace algd {

// One structure read from a definition file. Exactly one of the two payloads
// is set, matching kind; fibers only accompany a Poisson chart.
struct Definition {
  enum class Kind { AlgebroidKind, PoissonKind };
  Kind kind = Kind::AlgebroidKind;
  std::string name;
  std::optional<Algebroid> algebroid;
  std::optional<PoissonStructure> poisson;
  std::vector<std::string> fibers;
};

// Line-oriented format, '#' starts a comment:
//   kind algebroid|poisson      optional when the other lines determine it
//   name IDENT                  optional
//   base X1 X2 ...              chart coordinates
//   rank K as S1 ... SK         algebroid sections
//   anchor S -> X: EXPR         omitted entries are zero
//   structure [Si,Sj] = EXPR    i < j in declared order, each pair once
//   bivector [Xi,Xj] = EXPR     same rules on coordinates
//   fibers X...                 subset of base, marks a dual fibration
Definition parse_definition(const std::string& text);

// Reads and parses the file; failures to open raise Error.
Definition load_definition(const std::string& path);

// Canonical definition text; parse_definition round-trips it.
std::string render_definition(const Algebroid& A, const std::string& name);
std::string render_definition(const PoissonStructure& L, const std::string& name,
                              const std::vector<std::string>& fibers = {});

}  // namespace algd

#endif
