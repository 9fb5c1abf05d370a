#include "algd/lifts.hpp"

#include <map>
#include <utility>

#include "algd/error.hpp"

namespace algd {

namespace {

std::string dotted(const std::string& name) { return name + "dot"; }

std::vector<std::string> with_dots(const std::vector<std::string>& names) {
  std::vector<std::string> out = names;
  for (const auto& n : names) out.push_back(dotted(n));
  return out;
}

Poly velocity_derivative(const Poly& p, const std::vector<std::string>& base) {
  Poly out;
  for (const auto& x : base)
    out += p.partial(x) * Poly::variable(dotted(x));
  return out;
}

}  // namespace

PoissonStructure tangent_lift_poisson(const PoissonStructure& L) {
  if (!is_poisson(L).valid)
    throw NotPoissonError("bivector fails the Jacobi identity");
  const int n = L.dim();
  std::map<std::pair<int, int>, Poly> upper;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      Poly e = L.entry(a, b);
      if (!e.is_zero()) upper.emplace(std::make_pair(a, n + b), e);
    }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Poly e = velocity_derivative(L.entry(i, j), L.coords());
      if (!e.is_zero()) upper.emplace(std::make_pair(n + i, n + j), e);
    }
  return PoissonStructure(with_dots(L.coords()), std::move(upper));
}

Algebroid tangent_lift_algebroid(const Algebroid& A) {
  if (!check_axioms(A).valid)
    throw InvalidAlgebroidError("axioms fail; the lift is only defined for algebroids");
  const int n = A.dim();
  const int k = A.rank();

  std::vector<std::string> sections;
  sections.reserve(2 * k);
  for (const auto& s : A.sections()) sections.push_back(dotted(s));
  for (const auto& s : A.sections()) sections.push_back(s);

  std::vector<std::vector<Poly>> anchor(2 * k, std::vector<Poly>(2 * n, Poly(0)));
  for (int r = 1; r <= k; ++r)
    for (int a = 1; a <= n; ++a) {
      const Poly& rho = A.anchor_entry(r, a);
      anchor[r - 1][a - 1] = rho;
      anchor[r - 1][n + a - 1] = velocity_derivative(rho, A.coords());
      anchor[k + r - 1][n + a - 1] = rho;
    }

  std::map<std::pair<int, int>, std::vector<Poly>> structure;
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      std::vector<Poly> comps(2 * k, Poly(0));
      bool nonzero = false;
      for (int m = 1; m <= k; ++m) {
        Poly cm = A.c(i, j, m);
        if (cm.is_zero()) continue;
        nonzero = true;
        comps[m - 1] = cm;
        comps[k + m - 1] = velocity_derivative(cm, A.coords());
      }
      if (nonzero) structure.emplace(std::make_pair(i, j), std::move(comps));
    }
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      std::vector<Poly> comps(2 * k, Poly(0));
      bool nonzero = false;
      for (int m = 1; m <= k; ++m) {
        Poly cm = A.c(i, j, m);
        if (cm.is_zero()) continue;
        nonzero = true;
        comps[k + m - 1] = cm;
      }
      if (nonzero) structure.emplace(std::make_pair(i, k + j), std::move(comps));
    }

  return Algebroid(with_dots(A.coords()), sections, anchor, structure);
}

Section complete_lift_section(const Algebroid& A, const Section& X) {
  if (X.rank() != A.rank())
    throw RankMismatchError("section rank does not match the algebroid");
  const int k = A.rank();
  std::vector<Poly> comps(2 * k, Poly(0));
  for (int r = 1; r <= k; ++r) {
    comps[r - 1] = X.component(r);
    comps[k + r - 1] = velocity_derivative(X.component(r), A.coords());
  }
  return Section(2 * k, std::move(comps));
}

}  // namespace algd
