#include "algd/poisson.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "algd/error.hpp"

namespace algd {

namespace {

void check_coord_names(const std::vector<std::string>& coords) {
  std::set<std::string> seen;
  for (const auto& name : coords) {
    if (name.empty()) throw NameCollisionError("empty coordinate name");
    if (!seen.insert(name).second)
      throw NameCollisionError("duplicate coordinate " + name);
  }
}

void check_entry_chart(const Poly& p, const std::vector<std::string>& coords,
                       int i, int j) {
  for (const auto& v : p.vars()) {
    if (std::find(coords.begin(), coords.end(), v) == coords.end())
      throw ContextMismatchError("entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") uses variable " + v +
                                 " outside the chart");
  }
}

}  // namespace

PoissonStructure::PoissonStructure(std::vector<std::string> coords,
                                   std::map<std::pair<int, int>, Poly> upper)
    : coords_(std::move(coords)) {
  check_coord_names(coords_);
  const int n = dim();
  lambda_.assign(n, std::vector<Poly>(n, Poly(0)));
  for (const auto& [key, value] : upper) {
    auto [i, j] = key;
    if (i < 1 || j <= i || j > n)
      throw RankMismatchError("bivector entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") is not strictly upper");
    check_entry_chart(value, coords_, i, j);
    lambda_[i - 1][j - 1] = value;
    lambda_[j - 1][i - 1] = -value;
  }
}

PoissonStructure PoissonStructure::from_bivector(
    std::vector<std::string> coords, const Multivector& mv) {
  if (!(mv == mv.part(2)))
    throw DegreeError("bivector must be homogeneous of degree 2");
  const int n = static_cast<int>(coords.size());
  if (mv.rank() != n)
    throw RankMismatchError("bivector rank does not match the chart");
  std::map<std::pair<int, int>, Poly> upper;
  for (const auto& [tuple, coeff] : mv.components())
    upper.emplace(std::make_pair(tuple[0], tuple[1]), coeff);
  return PoissonStructure(std::move(coords), std::move(upper));
}

int PoissonStructure::coord_index(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (coords_[i] == name) return i + 1;
  return 0;
}

Poly PoissonStructure::entry(int i, int j) const {
  if (i < 1 || i > dim() || j < 1 || j > dim())
    throw RankMismatchError("bivector index out of range");
  return lambda_[i - 1][j - 1];
}

Multivector PoissonStructure::as_bivector() const {
  std::map<IndexTuple, Poly, TupleOrder> comps;
  for (int i = 1; i < dim(); ++i)
    for (int j = i + 1; j <= dim(); ++j) {
      if (lambda_[i - 1][j - 1].is_zero()) continue;
      comps.emplace(IndexTuple{i, j}, lambda_[i - 1][j - 1]);
    }
  return Multivector::make(dim(), std::move(comps));
}

Algebroid tangent_algebroid(const std::vector<std::string>& coords) {
  check_coord_names(coords);
  const int n = static_cast<int>(coords.size());
  // Frame names must stay clear of the chart; charts that already use
  // e-names push the frame to a '#' prefix, unspellable in definitions.
  std::string stem = "e";
  for (bool clash = true; clash;) {
    clash = false;
    for (int i = 1; i <= n && !clash; ++i)
      clash = std::find(coords.begin(), coords.end(),
                        stem + std::to_string(i)) != coords.end();
    if (clash) stem = "#" + stem;
  }
  std::vector<std::string> sections;
  sections.reserve(n);
  for (int i = 1; i <= n; ++i) sections.push_back(stem + std::to_string(i));
  std::vector<std::vector<Poly>> anchor(n, std::vector<Poly>(n, Poly(0)));
  for (int i = 0; i < n; ++i) anchor[i][i] = Poly(1);
  return Algebroid(coords, sections, anchor, {});
}

Poly poisson_bracket(const PoissonStructure& L, const Poly& f, const Poly& g) {
  Algebroid tangent = tangent_algebroid(L.coords());
  Form df = d_rho(tangent, f);
  Form dg = d_rho(tangent, g);
  return pairing(wedge(df, dg), L.as_bivector());
}

CheckReport is_poisson(const PoissonStructure& L) {
  auto start = std::chrono::steady_clock::now();
  Algebroid tangent = tangent_algebroid(L.coords());
  Multivector square = schouten(tangent, L.as_bivector(), L.as_bivector());
  CheckReport rep;
  rep.subject = "poisson";
  rep.identities = {"schouten-square"};
  for (const auto& [tuple, coeff] : square.components()) {
    if (coeff.is_zero()) continue;
    rep.residuals.push_back({"schouten-square", tuple, coeff.to_string()});
  }
  rep.valid = rep.residuals.empty();
  rep.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

VectorField sharp(const PoissonStructure& L, const Form& alpha) {
  if (!(alpha == alpha.part(1)))
    throw DegreeError("sharp expects a 1-form");
  if (alpha.rank() != L.dim() && !alpha.components().empty())
    throw RankMismatchError("1-form rank does not match the chart");
  VectorField out;
  out.comps.assign(L.dim(), Poly(0));
  for (const auto& [tuple, coeff] : alpha.components()) {
    int i = tuple[0];
    for (int b = 1; b <= L.dim(); ++b)
      out.comps[b - 1] = out.comps[b - 1] + coeff * L.entry(i, b);
  }
  return out;
}

Multivector sharp_extend(const PoissonStructure& L, const Form& eta) {
  const int n = L.dim();
  if (eta.rank() != n && !eta.components().empty())
    throw RankMismatchError("form rank does not match the chart");
  std::vector<Multivector> row_images;
  row_images.reserve(n);
  for (int i = 1; i <= n; ++i) {
    std::map<IndexTuple, Poly, TupleOrder> comps;
    for (int b = 1; b <= n; ++b) {
      Poly v = L.entry(i, b);
      if (!v.is_zero()) comps.emplace(IndexTuple{b}, v);
    }
    row_images.push_back(Multivector::make(n, std::move(comps)));
  }
  Multivector out = Multivector::make(n, {});
  for (const auto& [tuple, coeff] : eta.components()) {
    Multivector term =
        Multivector::make(n, {{IndexTuple{}, coeff}});
    for (int idx : tuple) term = wedge(term, row_images[idx - 1]);
    out = out + term;
  }
  return out;
}

Algebroid cotangent_algebroid(const PoissonStructure& L) {
  CheckReport rep = is_poisson(L);
  if (!rep.valid)
    throw NotPoissonError("bivector fails the Jacobi identity");
  const int n = L.dim();
  std::vector<std::string> sections;
  sections.reserve(n);
  for (const auto& coord : L.coords()) sections.push_back("d" + coord);
  std::vector<std::vector<Poly>> anchor(n, std::vector<Poly>(n, Poly(0)));
  for (int i = 1; i <= n; ++i)
    for (int b = 1; b <= n; ++b) anchor[i - 1][b - 1] = L.entry(i, b);
  std::map<std::pair<int, int>, std::vector<Poly>> structure;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Poly> comps;
      comps.reserve(n);
      bool nonzero = false;
      for (int m = 1; m <= n; ++m) {
        Poly d = L.entry(i, j).partial(L.coords()[m - 1]);
        if (!d.is_zero()) nonzero = true;
        comps.push_back(d);
      }
      if (nonzero) structure.emplace(std::make_pair(i, j), std::move(comps));
    }
  return Algebroid(L.coords(), sections, anchor, structure);
}

Multivector lichnerowicz(const PoissonStructure& L, const Multivector& Q) {
  CheckReport rep = is_poisson(L);
  if (!rep.valid)
    throw NotPoissonError("bivector fails the Jacobi identity");
  Algebroid tangent = tangent_algebroid(L.coords());
  return schouten(tangent, L.as_bivector(), Q);
}

}  // namespace algd
