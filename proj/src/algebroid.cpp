#include "algd/algebroid.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "algd/calculus.hpp"
#include "algd/error.hpp"

namespace algd {

namespace {

void check_distinct(const std::vector<std::string>& coords,
                    const std::vector<std::string>& sections) {
  std::set<std::string> seen;
  for (const auto& n : coords) {
    if (!seen.insert(n).second) {
      throw NameCollisionError("duplicate name '" + n + "' in chart");
    }
  }
  for (const auto& n : sections) {
    if (!seen.insert(n).second) {
      throw NameCollisionError("duplicate name '" + n + "' in chart");
    }
  }
}

void check_in_chart(const std::vector<std::string>& coords, const Poly& p,
                    const char* what) {
  for (const auto& v : p.vars()) {
    if (std::find(coords.begin(), coords.end(), v) == coords.end()) {
      throw ContextMismatchError(std::string(what) + " mentions variable '" + v +
                                 "' outside the base chart");
    }
  }
}

}  // namespace

Algebroid::Algebroid(std::vector<std::string> coords,
                     std::vector<std::string> sections,
                     std::vector<std::vector<Poly>> anchor,
                     std::map<std::pair<int, int>, std::vector<Poly>> structure)
    : coords_(std::move(coords)), sections_(std::move(sections)),
      anchor_(std::move(anchor)) {
  check_distinct(coords_, sections_);
  int n = dim();
  int k = rank();
  if (static_cast<int>(anchor_.size()) != k) {
    throw RankMismatchError("anchor must have one row per section");
  }
  for (const auto& row : anchor_) {
    if (static_cast<int>(row.size()) != n) {
      throw RankMismatchError("anchor row length differs from base dimension");
    }
    for (const auto& p : row) check_in_chart(coords_, p, "anchor entry");
  }
  c_.assign(k, std::vector<std::vector<Poly>>(k, std::vector<Poly>(k)));
  for (const auto& [pair, comps] : structure) {
    auto [i, j] = pair;
    if (i < 1 || j < 1 || i > k || j > k || i >= j) {
      throw DegreeError("structure entries are indexed by pairs with i < j");
    }
    if (static_cast<int>(comps.size()) != k) {
      throw RankMismatchError("structure entry component count differs from rank");
    }
    for (int m = 0; m < k; ++m) {
      check_in_chart(coords_, comps[m], "structure function");
      c_[i - 1][j - 1][m] = comps[m];
      c_[j - 1][i - 1][m] = -comps[m];
    }
  }
}

const Poly& Algebroid::anchor_entry(int r, int a) const {
  return anchor_[r - 1][a - 1];
}

Poly Algebroid::c(int i, int j, int m) const { return c_[i - 1][j - 1][m - 1]; }

int Algebroid::section_index(const std::string& name) const {
  auto it = std::find(sections_.begin(), sections_.end(), name);
  return it == sections_.end() ? 0
                               : static_cast<int>(it - sections_.begin()) + 1;
}

int Algebroid::coord_index(const std::string& name) const {
  auto it = std::find(coords_.begin(), coords_.end(), name);
  return it == coords_.end() ? 0 : static_cast<int>(it - coords_.begin()) + 1;
}

Algebroid Algebroid::with_section_names(std::vector<std::string> names) const {
  if (static_cast<int>(names.size()) != rank()) {
    throw RankMismatchError("section rename list length differs from rank");
  }
  Algebroid out = *this;
  out.sections_ = std::move(names);
  check_distinct(out.coords_, out.sections_);
  return out;
}

bool operator==(const Algebroid& a, const Algebroid& b) {
  return a.coords_ == b.coords_ && a.sections_ == b.sections_ &&
         a.anchor_ == b.anchor_ && a.c_ == b.c_;
}

Poly apply_vector_field(const VectorField& v,
                        const std::vector<std::string>& coords, const Poly& f) {
  Poly out;
  for (std::size_t a = 0; a < coords.size(); ++a) {
    if (!v.comps[a].is_zero()) out += v.comps[a] * f.partial(coords[a]);
  }
  return out;
}

VectorField vector_field_bracket(const VectorField& v, const VectorField& w,
                                 const std::vector<std::string>& coords) {
  VectorField out;
  out.comps.resize(coords.size());
  for (std::size_t a = 0; a < coords.size(); ++a) {
    out.comps[a] =
        apply_vector_field(v, coords, w.comps[a]) - apply_vector_field(w, coords, v.comps[a]);
  }
  return out;
}

VectorField anchor_apply(const Algebroid& A, const Section& s) {
  if (s.rank() != A.rank()) {
    throw RankMismatchError("section rank differs from algebroid rank");
  }
  VectorField out;
  out.comps.assign(A.dim(), Poly());
  for (int r = 1; r <= A.rank(); ++r) {
    Poly sr = s.component(r);
    if (sr.is_zero()) continue;
    check_in_chart(A.coords(), sr, "section coefficient");
    for (int a = 1; a <= A.dim(); ++a) {
      out.comps[a - 1] += sr * A.anchor_entry(r, a);
    }
  }
  return out;
}

Poly lie_scalar(const Algebroid& A, const Section& s, const Poly& f) {
  check_in_chart(A.coords(), f, "function");
  return apply_vector_field(anchor_apply(A, s), A.coords(), f);
}

Section bracket_sections(const Algebroid& A, const Section& X, const Section& Y) {
  if (X.rank() != A.rank() || Y.rank() != A.rank()) {
    throw RankMismatchError("section rank differs from algebroid rank");
  }
  int k = A.rank();
  std::vector<Poly> out(k);
  VectorField rx = anchor_apply(A, X);
  VectorField ry = anchor_apply(A, Y);
  for (int m = 1; m <= k; ++m) {
    Poly acc;
    for (int i = 1; i <= k; ++i) {
      Poly xi = X.component(i);
      if (xi.is_zero()) continue;
      for (int j = 1; j <= k; ++j) {
        Poly yj = Y.component(j);
        if (yj.is_zero()) continue;
        Poly cm = A.c(i, j, m);
        if (!cm.is_zero()) acc += xi * yj * cm;
      }
    }
    acc += apply_vector_field(rx, A.coords(), Y.component(m));
    acc -= apply_vector_field(ry, A.coords(), X.component(m));
    out[m - 1] = std::move(acc);
  }
  return Section(k, std::move(out));
}

CheckReport check_axioms(const Algebroid& A) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.subject = "algebroid";
  rep.identities = {"anchor-homomorphism", "jacobi"};
  int n = A.dim();
  int k = A.rank();
  // [rho s_i, rho s_j] = rho {s_i, s_j}, componentwise on basis pairs.
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int a = 1; a <= n; ++a) {
        Poly res;
        for (int b = 1; b <= n; ++b) {
          res += A.anchor_entry(i, b) * A.anchor_entry(j, a).partial(A.coords()[b - 1]);
          res -= A.anchor_entry(j, b) * A.anchor_entry(i, a).partial(A.coords()[b - 1]);
        }
        for (int m = 1; m <= k; ++m) {
          Poly cm = A.c(i, j, m);
          if (!cm.is_zero()) res -= cm * A.anchor_entry(m, a);
        }
        if (!res.is_zero()) {
          rep.residuals.push_back({"anchor-homomorphism", {i, j, a}, res.to_string()});
        }
      }
    }
  }
  // Jacobiator component l on the basis triple (i, j, m), cyclic sum of the
  // quadratic c-term and the anchor derivative of c.
  auto jac_term = [&](int i, int j, int m, int l) {
    Poly res;
    for (int p = 1; p <= k; ++p) {
      Poly cjm = A.c(j, m, p);
      if (!cjm.is_zero()) res += cjm * A.c(i, p, l);
    }
    for (int b = 1; b <= n; ++b) {
      Poly rib = A.anchor_entry(i, b);
      if (!rib.is_zero()) res += rib * A.c(j, m, l).partial(A.coords()[b - 1]);
    }
    return res;
  };
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int m = j + 1; m <= k; ++m) {
        for (int l = 1; l <= k; ++l) {
          Poly res = jac_term(i, j, m, l) + jac_term(j, m, i, l) + jac_term(m, i, j, l);
          if (!res.is_zero()) {
            rep.residuals.push_back({"jacobi", {i, j, m, l}, res.to_string()});
          }
        }
      }
    }
  }
  rep.valid = rep.residuals.empty();
  rep.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

Derivation1::Derivation1(std::vector<std::string> coords, int rank,
                         std::vector<Form> on_functions,
                         std::vector<Form> on_coforms)
    : coords_(std::move(coords)), rank_(rank),
      on_functions_(std::move(on_functions)), on_coforms_(std::move(on_coforms)) {
  if (static_cast<int>(on_functions_.size()) != static_cast<int>(coords_.size())) {
    throw RankMismatchError("derivation needs one 1-form per coordinate");
  }
  if (static_cast<int>(on_coforms_.size()) != rank_) {
    throw RankMismatchError("derivation needs one 2-form per basis coform");
  }
  for (const auto& f : on_functions_) {
    if (f.rank() != rank_ || !(f.is_zero() || f.is_homogeneous(1))) {
      throw DegreeError("delta of a function must be a rank-matched 1-form");
    }
  }
  for (const auto& f : on_coforms_) {
    if (f.rank() != rank_ || !(f.is_zero() || f.is_homogeneous(2))) {
      throw DegreeError("delta of a basis coform must be a rank-matched 2-form");
    }
  }
}

Form Derivation1::apply(const Poly& f) const {
  Form out(rank_);
  for (std::size_t a = 0; a < coords_.size(); ++a) {
    Poly df = f.partial(coords_[a]);
    if (!df.is_zero()) out += on_functions_[a].scaled(df);
  }
  return out;
}

Form Derivation1::apply(const Form& eta) const {
  if (eta.rank() != rank_) {
    throw RankMismatchError("form rank differs from derivation rank");
  }
  Form out(rank_);
  for (const auto& [T, f] : eta.components()) {
    Form basis = Form::make(rank_, {{T, Poly(1)}});
    out += wedge(apply(f), basis);
    // Graded Leibniz through the factors of eps_{t1} ^ ... ^ eps_{tp}.
    for (std::size_t jpos = 0; jpos < T.size(); ++jpos) {
      Form piece = Form::make(
          rank_, {{IndexTuple(T.begin(), T.begin() + jpos), Poly(1)}});
      piece = wedge(piece, on_coforms_[T[jpos] - 1]);
      piece = wedge(piece, Form::make(rank_, {{IndexTuple(T.begin() + jpos + 1,
                                                          T.end()),
                                               Poly(1)}}));
      if (jpos % 2 != 0) piece = -piece;
      out += piece.scaled(f);
    }
  }
  return out;
}

bool operator==(const Derivation1& a, const Derivation1& b) {
  return a.coords_ == b.coords_ && a.rank_ == b.rank_ &&
         a.on_functions_ == b.on_functions_ && a.on_coforms_ == b.on_coforms_;
}

Derivation1 to_derivation(const Algebroid& A) {
  CheckReport rep = check_axioms(A);
  if (!rep.valid) {
    throw InvalidAlgebroidError(
        "to_derivation requires a valid algebroid; axioms fail with " +
        std::to_string(rep.residuals.size()) + " nonzero residual(s)");
  }
  std::vector<Form> on_functions;
  for (int a = 1; a <= A.dim(); ++a) {
    on_functions.push_back(d_rho(A, Poly::variable(A.coords()[a - 1])));
  }
  std::vector<Form> on_coforms;
  for (int r = 1; r <= A.rank(); ++r) {
    on_coforms.push_back(
        d_rho(A, Form::make(A.rank(), {{IndexTuple{r}, Poly(1)}})));
  }
  return Derivation1(A.coords(), A.rank(), std::move(on_functions),
                     std::move(on_coforms));
}

Algebroid from_derivation(const std::vector<std::string>& sections,
                          const Derivation1& delta) {
  if (static_cast<int>(sections.size()) != delta.rank()) {
    throw RankMismatchError("section name count differs from derivation rank");
  }
  for (std::size_t a = 0; a < delta.coords().size(); ++a) {
    Form sq = delta.apply(delta.on_function(static_cast<int>(a) + 1));
    if (!sq.is_zero()) {
      throw SquareNonzeroError(delta.coords()[a],
                               "delta^2 is nonzero on generator '" +
                                   delta.coords()[a] + "'");
    }
  }
  for (int r = 1; r <= delta.rank(); ++r) {
    Form sq = delta.apply(delta.on_coform(r));
    if (!sq.is_zero()) {
      std::string gen = "eps" + std::to_string(r);
      throw SquareNonzeroError(gen,
                               "delta^2 is nonzero on generator '" + gen + "'");
    }
  }
  int k = delta.rank();
  int n = static_cast<int>(delta.coords().size());
  std::vector<std::vector<Poly>> anchor(k, std::vector<Poly>(n));
  for (int a = 1; a <= n; ++a) {
    const Form& da = delta.on_function(a);
    for (int r = 1; r <= k; ++r) anchor[r - 1][a - 1] = da.component({r});
  }
  std::map<std::pair<int, int>, std::vector<Poly>> structure;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      std::vector<Poly> comps(k);
      bool any = false;
      for (int m = 1; m <= k; ++m) {
        comps[m - 1] = -delta.on_coform(m).component({i, j});
        any = any || !comps[m - 1].is_zero();
      }
      if (any) structure.emplace(std::make_pair(i, j), std::move(comps));
    }
  }
  return Algebroid(delta.coords(), sections, std::move(anchor),
                   std::move(structure));
}

}  // namespace algd
