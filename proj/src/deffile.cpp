#include "algd/deffile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "algd/error.hpp"
#include "algd/parse.hpp"
#include "algd/render.hpp"

namespace algd {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
  });
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// One "... [A,B] = EXPR" entry; shared by structure and bivector lines.
struct PairEntry {
  std::string first;
  std::string second;
  std::string expr;
  int line;
};

PairEntry parse_pair_line(const std::string& rest, int line,
                          const std::string& directive) {
  std::size_t lb = rest.find('[');
  std::size_t rb = rest.find(']');
  std::size_t eq = rest.find('=');
  if (lb == std::string::npos || rb == std::string::npos || eq == std::string::npos ||
      rb < lb || eq < rb)
    throw SyntaxError(line, 1, directive + " line must look like " + directive +
                                   " [a,b] = EXPR");
  std::string inner = rest.substr(lb + 1, rb - lb - 1);
  std::size_t comma = inner.find(',');
  if (comma == std::string::npos)
    throw SyntaxError(line, 1, directive + " pair needs two comma-separated names");
  PairEntry entry;
  entry.first = strip(inner.substr(0, comma));
  entry.second = strip(inner.substr(comma + 1));
  entry.expr = strip(rest.substr(eq + 1));
  entry.line = line;
  if (!is_identifier(entry.first) || !is_identifier(entry.second))
    throw SyntaxError(line, 1, directive + " pair needs two identifiers");
  if (entry.expr.empty())
    throw SyntaxError(line, 1, directive + " entry is missing an expression");
  return entry;
}

struct AnchorEntry {
  std::string section;
  std::string coord;
  std::string expr;
  int line;
};

int index_of(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? 0 : static_cast<int>(it - names.begin()) + 1;
}

}  // namespace

Definition parse_definition(const std::string& text) {
  std::optional<std::string> kind_word, name_word;
  std::optional<std::vector<std::string>> base;
  std::optional<int> rank;
  std::vector<std::string> section_names;
  std::vector<AnchorEntry> anchors;
  std::vector<PairEntry> structures, bivectors;
  std::optional<std::vector<std::string>> fibers;
  int fibers_line = 0;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string directive;
    ls >> directive;
    std::string rest = strip(line.substr(directive.size()));

    if (directive == "kind") {
      if (kind_word) throw SyntaxError(lineno, 1, "duplicate kind line");
      if (rest != "algebroid" && rest != "poisson")
        throw SyntaxError(lineno, 1, "kind must be algebroid or poisson");
      kind_word = rest;
    } else if (directive == "name") {
      if (name_word) throw SyntaxError(lineno, 1, "duplicate name line");
      if (!is_identifier(rest))
        throw SyntaxError(lineno, 1, "name must be a single identifier");
      name_word = rest;
    } else if (directive == "base") {
      if (base) throw SyntaxError(lineno, 1, "duplicate base line");
      auto words = split_words(rest);
      for (const auto& w : words)
        if (!is_identifier(w))
          throw SyntaxError(lineno, 1, "base coordinate " + w +
                                           " is not an identifier");
      base = words;
    } else if (directive == "rank") {
      if (rank) throw SyntaxError(lineno, 1, "duplicate rank line");
      auto words = split_words(rest);
      if (words.size() < 2 || words[1] != "as")
        throw SyntaxError(lineno, 1, "rank line must look like rank K as S1 ... SK");
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(words[0], &used);
        if (used != words[0].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw SyntaxError(lineno, 1, "rank must be a nonnegative integer");
      }
      if (k < 0 || static_cast<int>(words.size()) != k + 2)
        throw SyntaxError(lineno, 1, "rank line must list exactly K section names");
      for (std::size_t i = 2; i < words.size(); ++i)
        if (!is_identifier(words[i]))
          throw SyntaxError(lineno, 1, "section name " + words[i] +
                                           " is not an identifier");
      rank = k;
      section_names.assign(words.begin() + 2, words.end());
    } else if (directive == "anchor") {
      std::size_t arrow = rest.find("->");
      if (arrow == std::string::npos)
        throw SyntaxError(lineno, 1, "anchor line must look like anchor S -> X: EXPR");
      AnchorEntry entry;
      entry.section = strip(rest.substr(0, arrow));
      std::string tail = strip(rest.substr(arrow + 2));
      std::size_t colon = tail.find(':');
      if (colon == std::string::npos)
        throw SyntaxError(lineno, 1, "anchor line must look like anchor S -> X: EXPR");
      entry.coord = strip(tail.substr(0, colon));
      entry.expr = strip(tail.substr(colon + 1));
      entry.line = lineno;
      if (!is_identifier(entry.section) || !is_identifier(entry.coord))
        throw SyntaxError(lineno, 1, "anchor entry needs a section and a coordinate");
      if (entry.expr.empty())
        throw SyntaxError(lineno, 1, "anchor entry is missing an expression");
      anchors.push_back(std::move(entry));
    } else if (directive == "structure") {
      structures.push_back(parse_pair_line(rest, lineno, "structure"));
    } else if (directive == "bivector") {
      bivectors.push_back(parse_pair_line(rest, lineno, "bivector"));
    } else if (directive == "fibers") {
      if (fibers) throw SyntaxError(lineno, 1, "duplicate fibers line");
      auto words = split_words(rest);
      for (const auto& w : words)
        if (!is_identifier(w))
          throw SyntaxError(lineno, 1, "fiber coordinate " + w +
                                           " is not an identifier");
      fibers = words;
      fibers_line = lineno;
    } else {
      throw SyntaxError(lineno, 1, "unknown directive " + directive);
    }
  }

  bool algebroid_lines = rank || !anchors.empty() || !structures.empty();
  bool poisson_lines = !bivectors.empty() || fibers.has_value();
  if (algebroid_lines && poisson_lines)
    throw SyntaxError(1, 1, "definition mixes algebroid and poisson directives");

  std::string kind;
  if (kind_word) {
    kind = *kind_word;
    if (kind == "algebroid" && poisson_lines)
      throw SyntaxError(1, 1, "algebroid definition cannot carry poisson directives");
    if (kind == "poisson" && algebroid_lines)
      throw SyntaxError(1, 1, "poisson definition cannot carry algebroid directives");
  } else if (algebroid_lines) {
    kind = "algebroid";
  } else if (poisson_lines) {
    kind = "poisson";
  } else {
    throw SyntaxError(1, 1, "cannot infer the kind; add a kind line");
  }

  Definition out;
  out.name = name_word.value_or("");
  std::vector<std::string> chart = base.value_or(std::vector<std::string>{});

  if (kind == "algebroid") {
    if (!rank) throw SyntaxError(1, 1, "algebroid definition needs a rank line");
    const int k = *rank;
    const int n = static_cast<int>(chart.size());
    SymbolTable syms;
    syms.scalars = chart;
    syms.basis = section_names;
    syms.rank = k;

    std::vector<std::vector<Poly>> anchor(k, std::vector<Poly>(n, Poly(0)));
    std::set<std::pair<int, int>> seen_anchor;
    for (const auto& entry : anchors) {
      int r = index_of(section_names, entry.section);
      if (r == 0)
        throw SyntaxError(entry.line, 1, "anchor section " + entry.section +
                                             " is not declared");
      int a = index_of(chart, entry.coord);
      if (a == 0)
        throw SyntaxError(entry.line, 1, "anchor coordinate " + entry.coord +
                                             " is not declared");
      if (!seen_anchor.insert({r, a}).second)
        throw SyntaxError(entry.line, 1, "duplicate anchor entry for " +
                                             entry.section + " -> " + entry.coord);
      anchor[r - 1][a - 1] =
          expect_scalar(eval_expression(entry.expr, syms, entry.line));
    }

    std::map<std::pair<int, int>, std::vector<Poly>> structure;
    for (const auto& entry : structures) {
      int i = index_of(section_names, entry.first);
      int j = index_of(section_names, entry.second);
      if (i == 0 || j == 0)
        throw SyntaxError(entry.line, 1, "structure pair uses an undeclared section");
      if (i == j)
        throw SyntaxError(entry.line, 1, "structure pair repeats a section");
      if (i > j)
        throw SyntaxError(entry.line, 1,
                          "structure pairs must follow the declared section order");
      if (structure.count({i, j}))
        throw SyntaxError(entry.line, 1, "duplicate structure entry [" +
                                             entry.first + "," + entry.second + "]");
      Section value =
          expect_section(eval_expression(entry.expr, syms, entry.line), k);
      std::vector<Poly> comps;
      comps.reserve(k);
      for (int m = 1; m <= k; ++m) comps.push_back(value.component(m));
      structure.emplace(std::make_pair(i, j), std::move(comps));
    }

    out.kind = Definition::Kind::AlgebroidKind;
    out.algebroid = Algebroid(chart, section_names, anchor, structure);
    return out;
  }

  SymbolTable syms;
  syms.scalars = chart;
  std::map<std::pair<int, int>, Poly> upper;
  for (const auto& entry : bivectors) {
    int i = index_of(chart, entry.first);
    int j = index_of(chart, entry.second);
    if (i == 0 || j == 0)
      throw SyntaxError(entry.line, 1, "bivector pair uses an undeclared coordinate");
    if (i == j)
      throw SyntaxError(entry.line, 1, "bivector pair repeats a coordinate");
    if (i > j)
      throw SyntaxError(entry.line, 1,
                        "bivector pairs must follow the declared coordinate order");
    if (upper.count({i, j}))
      throw SyntaxError(entry.line, 1, "duplicate bivector entry [" + entry.first +
                                           "," + entry.second + "]");
    upper.emplace(std::make_pair(i, j),
                  expect_scalar(eval_expression(entry.expr, syms, entry.line)));
  }
  out.kind = Definition::Kind::PoissonKind;
  out.poisson = PoissonStructure(chart, std::move(upper));
  if (fibers) {
    std::set<std::string> seen;
    for (const auto& f : *fibers) {
      if (index_of(chart, f) == 0)
        throw SyntaxError(fibers_line, 1, "fiber coordinate " + f +
                                              " is not in the base line");
      if (!seen.insert(f).second)
        throw SyntaxError(fibers_line, 1, "duplicate fiber coordinate " + f);
    }
    out.fibers = *fibers;
  }
  return out;
}

Definition load_definition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_definition(buf.str());
}

std::string render_definition(const Algebroid& A, const std::string& name) {
  std::ostringstream out;
  out << "kind algebroid\n";
  if (!name.empty()) out << "name " << name << "\n";
  out << "base";
  for (const auto& c : A.coords()) out << " " << c;
  out << "\n";
  out << "rank " << A.rank() << " as";
  for (const auto& s : A.sections()) out << " " << s;
  out << "\n";
  for (int r = 1; r <= A.rank(); ++r)
    for (int a = 1; a <= A.dim(); ++a) {
      const Poly& rho = A.anchor_entry(r, a);
      if (rho.is_zero()) continue;
      out << "anchor " << A.sections()[r - 1] << " -> " << A.coords()[a - 1]
          << ": " << rho.to_string() << "\n";
    }
  for (int i = 1; i < A.rank(); ++i)
    for (int j = i + 1; j <= A.rank(); ++j) {
      Multivector::Components comps;
      for (int m = 1; m <= A.rank(); ++m) {
        Poly cm = A.c(i, j, m);
        if (!cm.is_zero()) comps.emplace(IndexTuple{m}, cm);
      }
      if (comps.empty()) continue;
      out << "structure [" << A.sections()[i - 1] << "," << A.sections()[j - 1]
          << "] = "
          << render_multivector(Multivector::make(A.rank(), std::move(comps)),
                                A.sections())
          << "\n";
    }
  return out.str();
}

std::string render_definition(const PoissonStructure& L, const std::string& name,
                              const std::vector<std::string>& fibers) {
  std::ostringstream out;
  out << "kind poisson\n";
  if (!name.empty()) out << "name " << name << "\n";
  out << "base";
  for (const auto& c : L.coords()) out << " " << c;
  out << "\n";
  for (int i = 1; i < L.dim(); ++i)
    for (int j = i + 1; j <= L.dim(); ++j) {
      Poly e = L.entry(i, j);
      if (e.is_zero()) continue;
      out << "bivector [" << L.coords()[i - 1] << "," << L.coords()[j - 1]
          << "] = " << e.to_string() << "\n";
    }
  if (!fibers.empty()) {
    out << "fibers";
    for (const auto& f : fibers) out << " " << f;
    out << "\n";
  }
  return out.str();
}

}  // namespace algd
