#include "algd/duality.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <utility>

#include "algd/error.hpp"

namespace algd {

namespace {

std::set<std::string> name_set(const std::vector<std::string>& names) {
  return std::set<std::string>(names.begin(), names.end());
}

// Dual bracket tensor without the axiom gate; diagnostics below want it on
// candidates that may fail the axioms.
PoissonStructure dual_poisson_raw(const Algebroid& A) {
  const int n = A.dim();
  const int k = A.rank();
  std::map<std::pair<int, int>, Poly> upper;
  for (int r = 1; r <= k; ++r)
    for (int a = 1; a <= n; ++a) {
      const Poly& rho = A.anchor_entry(r, a);
      if (!rho.is_zero()) upper.emplace(std::make_pair(a, n + r), -rho);
    }
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      Poly entry;
      for (int m = 1; m <= k; ++m)
        entry += A.c(i, j, m) * Poly::variable(A.sections()[m - 1]);
      if (!entry.is_zero()) upper.emplace(std::make_pair(n + i, n + j), entry);
    }
  return PoissonStructure(dual_chart(A).all(), std::move(upper));
}

}  // namespace

std::vector<std::string> DualChart::all() const {
  std::vector<std::string> out = base;
  out.insert(out.end(), fiber.begin(), fiber.end());
  return out;
}

DualChart dual_chart(const Algebroid& A) {
  return DualChart{A.coords(), A.sections()};
}

VerticalFunction::VerticalFunction(DualChart chart, Poly value)
    : chart_(std::move(chart)), value_(std::move(value)) {
  auto coords = name_set(chart_.all());
  for (const auto& v : value_.vars()) {
    if (!coords.count(v))
      throw ContextMismatchError("vertical function uses variable " + v +
                                 " outside the dual chart");
  }
  auto pieces = value_.split_by_degree_in(name_set(chart_.fiber));
  for (const auto& [deg, piece] : pieces) {
    if (deg != 1 && !piece.is_zero())
      throw DegreeError("vertical function must be fiberwise linear");
  }
}

VerticalFunction vertical_function(const Algebroid& A, const Section& X) {
  if (X.rank() != A.rank())
    throw RankMismatchError("section rank does not match the algebroid");
  Poly value;
  for (int r = 1; r <= A.rank(); ++r)
    value += X.component(r) * Poly::variable(A.sections()[r - 1]);
  return VerticalFunction(dual_chart(A), value);
}

PoissonStructure dual_poisson(const Algebroid& A) {
  CheckReport axioms = check_axioms(A);
  if (!axioms.valid)
    throw InvalidAlgebroidError("axioms fail; the dual bracket would not be Poisson");
  return dual_poisson_raw(A);
}

CheckReport euler_homogeneity_check(const PoissonStructure& L,
                                    const std::vector<std::string>& fiber_vars) {
  auto start = std::chrono::steady_clock::now();
  Multivector::Components zc;
  for (const auto& name : fiber_vars) {
    int pos = L.coord_index(name);
    if (pos == 0)
      throw ContextMismatchError("fiber variable " + name + " is not in the chart");
    zc.emplace(IndexTuple{pos}, Poly::variable(name));
  }
  Multivector euler = Multivector::make(L.dim(), std::move(zc));
  Algebroid tangent = tangent_algebroid(L.coords());
  Multivector residual =
      schouten(tangent, euler, L.as_bivector()) + L.as_bivector();
  CheckReport rep;
  rep.subject = "poisson";
  rep.identities = {"euler-homogeneity"};
  for (const auto& [tuple, coeff] : residual.components())
    rep.residuals.push_back({"euler-homogeneity", tuple, coeff.to_string()});
  rep.valid = rep.residuals.empty();
  rep.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

Algebroid algebroid_from_dual_poisson(const PoissonStructure& L,
                                      const DualChart& chart) {
  const int n = static_cast<int>(chart.base.size());
  const int k = static_cast<int>(chart.fiber.size());
  if (n + k != L.dim())
    throw RankMismatchError("chart size does not match the Poisson chart");
  auto declared = name_set(chart.all());
  if (static_cast<int>(declared.size()) != n + k ||
      declared != name_set(L.coords()))
    throw ContextMismatchError("chart must split the Poisson coordinates");

  std::vector<int> bpos(n), fpos(k);
  for (int a = 0; a < n; ++a) bpos[a] = L.coord_index(chart.base[a]);
  for (int r = 0; r < k; ++r) fpos[r] = L.coord_index(chart.fiber[r]);
  auto fibers = name_set(chart.fiber);
  auto bracket_name = [&](const std::string& u, const std::string& v) {
    return "{" + u + "," + v + "}";
  };

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!L.entry(bpos[a], bpos[b]).is_zero())
        throw DegreeViolationError(bracket_name(chart.base[a], chart.base[b]),
                                   "base-base bracket must vanish");
    }
  for (int r = 0; r < k; ++r)
    for (int a = 0; a < n; ++a) {
      Poly e = L.entry(fpos[r], bpos[a]);
      for (const auto& f : chart.fiber) {
        if (e.depends_on(f))
          throw DegreeViolationError(bracket_name(chart.fiber[r], chart.base[a]),
                                     "fiber-base bracket must be fiber-free");
      }
    }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Poly e = L.entry(fpos[i], fpos[j]);
      for (const auto& [deg, piece] : e.split_by_degree_in(fibers)) {
        if (deg != 1 && !piece.is_zero())
          throw DegreeViolationError(bracket_name(chart.fiber[i], chart.fiber[j]),
                                     "fiber-fiber bracket must be fiber-linear");
      }
    }

  CheckReport euler = euler_homogeneity_check(L, chart.fiber);
  if (!euler.valid)
    throw HomogeneityError("bivector is not fiberwise linear");

  std::vector<std::vector<Poly>> anchor(k, std::vector<Poly>(n, Poly(0)));
  for (int r = 0; r < k; ++r)
    for (int a = 0; a < n; ++a) anchor[r][a] = L.entry(fpos[r], bpos[a]);
  std::map<std::pair<int, int>, std::vector<Poly>> structure;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Poly e = L.entry(fpos[i], fpos[j]);
      if (e.is_zero()) continue;
      std::vector<Poly> comps;
      comps.reserve(k);
      for (int m = 0; m < k; ++m) comps.push_back(e.partial(chart.fiber[m]));
      structure.emplace(std::make_pair(i + 1, j + 1), std::move(comps));
    }
  return Algebroid(chart.base, chart.fiber, anchor, structure);
}

CheckReport transpose_anchor_check(const Algebroid& A) {
  auto start = std::chrono::steady_clock::now();
  const int n = A.dim();
  const int k = A.rank();
  PoissonStructure dual = dual_poisson_raw(A);
  Algebroid tangent = tangent_algebroid(A.coords());
  PoissonStructure canonical = dual_poisson_raw(tangent);

  // Momentum image of each fiber generator under the anchor transpose.
  std::vector<Poly> momentum(k);
  for (int r = 0; r < k; ++r) {
    for (int a = 1; a <= n; ++a)
      momentum[r] += A.anchor_entry(r + 1, a) *
                     Poly::variable(tangent.sections()[a - 1]);
  }
  // Route fiber variables through fresh temporaries so overlapping names
  // between A's sections and the canonical momenta cannot cross-capture.
  auto pull = [&](const Poly& h) {
    std::map<std::string, std::string> tmp;
    for (int r = 0; r < k; ++r)
      tmp.emplace(A.sections()[r], "#xi" + std::to_string(r + 1));
    Poly p = h.rename(tmp);
    for (int r = 0; r < k; ++r)
      p = p.substitute("#xi" + std::to_string(r + 1), momentum[r]);
    return p;
  };

  CheckReport rep;
  rep.subject = "algebroid";
  rep.identities = {"anchor-transpose"};
  const auto chart = dual.coords();
  for (int u = 1; u <= n + k; ++u)
    for (int v = u + 1; v <= n + k; ++v) {
      Poly h1 = Poly::variable(chart[u - 1]);
      Poly h2 = Poly::variable(chart[v - 1]);
      Poly lhs = poisson_bracket(canonical, pull(h1), pull(h2));
      Poly rhs = pull(poisson_bracket(dual, h1, h2));
      Poly residual = lhs - rhs;
      if (!residual.is_zero())
        rep.residuals.push_back(
            {"anchor-transpose", {u, v}, residual.to_string()});
    }
  rep.valid = rep.residuals.empty();
  rep.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

}  // namespace algd
