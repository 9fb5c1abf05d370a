#include "algd/calculus.hpp"

#include <algorithm>

#include "algd/error.hpp"

namespace algd {

namespace {

void check_chart_coeffs(const Algebroid& A, const Poly& p, const char* what) {
  for (const auto& v : p.vars()) {
    if (A.coord_index(v) == 0) {
      throw ContextMismatchError(std::string(what) + " mentions variable '" + v +
                                 "' outside the base chart");
    }
  }
}

template <typename Tag>
void check_value(const Algebroid& A, const Graded<Tag>& v, const char* what) {
  if (v.rank() != A.rank()) {
    throw RankMismatchError(std::string(what) + " rank differs from algebroid rank");
  }
  for (const auto& [tuple, coef] : v.components()) check_chart_coeffs(A, coef, what);
}

// Value of eta on the listed basis sections: sign-sorted component lookup.
Poly eval_on_list(const Form& eta, std::vector<int> idxs) {
  auto sorted = detail::sort_with_sign(std::move(idxs));
  if (!sorted) return Poly();
  Poly v = eta.component(sorted->first);
  return sorted->second < 0 ? -v : v;
}

Poly lie_basis(const Algebroid& A, int r, const Poly& f) {
  Poly out;
  for (int a = 1; a <= A.dim(); ++a) {
    const Poly& rho = A.anchor_entry(r, a);
    if (!rho.is_zero()) out += rho * f.partial(A.coords()[a - 1]);
  }
  return out;
}

Multivector basis_multivector(int rank, const IndexTuple& T) {
  return Multivector::make(rank, {{T, Poly(1)}});
}

Section basis_section(const Algebroid& A, int r, const Poly& coef) {
  std::vector<Poly> comps(A.rank());
  comps[r - 1] = coef;
  return Section(A.rank(), std::move(comps));
}

}  // namespace

Form d_rho(const Algebroid& A, const Poly& f) {
  check_chart_coeffs(A, f, "function");
  Form::Components out;
  for (int r = 1; r <= A.rank(); ++r) {
    Poly v = lie_basis(A, r, f);
    if (!v.is_zero()) out.emplace(IndexTuple{r}, std::move(v));
  }
  return Form::make(A.rank(), std::move(out));
}

Form d_rho(const Algebroid& A, const Form& eta) {
  check_value(A, eta, "form");
  int k = A.rank();
  Form result(k);
  for (int p : eta.degrees()) {
    Form part = eta.part(p);
    if (p == 0) {
      result += d_rho(A, part.component({}));
      continue;
    }
    Form::Components out;
    for (const IndexTuple& T : index_tuples(k, p + 1)) {
      Poly val;
      for (int i = 0; i <= p; ++i) {
        std::vector<int> rest;
        for (int t = 0; t <= p; ++t) {
          if (t != i) rest.push_back(T[t]);
        }
        Poly ev = eval_on_list(part, rest);
        if (!ev.is_zero()) {
          Poly term = lie_basis(A, T[i], ev);
          val += (i % 2 == 0) ? term : -term;
        }
      }
      for (int i = 0; i <= p; ++i) {
        for (int j = i + 1; j <= p; ++j) {
          std::vector<int> rest;
          for (int t = 0; t <= p; ++t) {
            if (t != i && t != j) rest.push_back(T[t]);
          }
          for (int m = 1; m <= k; ++m) {
            Poly cm = A.c(T[i], T[j], m);
            if (cm.is_zero()) continue;
            std::vector<int> idxs;
            idxs.push_back(m);
            idxs.insert(idxs.end(), rest.begin(), rest.end());
            Poly ev = eval_on_list(part, std::move(idxs));
            if (ev.is_zero()) continue;
            Poly term = cm * ev;
            val += ((i + j) % 2 == 0) ? term : -term;
          }
        }
      }
      if (!val.is_zero()) out.emplace(T, std::move(val));
    }
    result += Form::make(k, std::move(out));
  }
  return result;
}

Form lie_form(const Algebroid& A, const Section& V, const Form& eta) {
  check_value(A, V.mv(), "section");
  check_value(A, eta, "form");
  int k = A.rank();
  VectorField rhoV = anchor_apply(A, V);
  std::vector<Section> br;
  br.reserve(k);
  for (int t = 1; t <= k; ++t) {
    br.push_back(bracket_sections(A, V, basis_section(A, t, Poly(1))));
  }
  Form result(k);
  for (int p : eta.degrees()) {
    Form part = eta.part(p);
    Form::Components out;
    for (const IndexTuple& T : index_tuples(k, p)) {
      Poly val = apply_vector_field(rhoV, A.coords(), part.component(T));
      for (int i = 0; i < p; ++i) {
        const Section& W = br[T[i] - 1];
        for (int m = 1; m <= k; ++m) {
          Poly wm = W.component(m);
          if (wm.is_zero()) continue;
          std::vector<int> idxs(T.begin(), T.end());
          idxs[i] = m;
          Poly ev = eval_on_list(part, std::move(idxs));
          if (!ev.is_zero()) val -= wm * ev;
        }
      }
      if (!val.is_zero()) out.emplace(T, std::move(val));
    }
    result += Form::make(k, std::move(out));
  }
  return result;
}

Multivector lie_multivector(const Algebroid& A, const Section& V,
                            const Multivector& P) {
  check_value(A, V.mv(), "section");
  check_value(A, P, "multivector");
  int k = A.rank();
  VectorField rhoV = anchor_apply(A, V);
  std::vector<Section> br;
  br.reserve(k);
  for (int t = 1; t <= k; ++t) {
    br.push_back(bracket_sections(A, V, basis_section(A, t, Poly(1))));
  }
  Multivector result(k);
  for (const auto& [T, f] : P.components()) {
    Poly lf = apply_vector_field(rhoV, A.coords(), f);
    if (!lf.is_zero()) {
      result += basis_multivector(k, T).scaled(lf);
    }
    // Leibniz over the wedge factors, replacing slot i by {V, s_{T[i]}}.
    for (std::size_t i = 0; i < T.size(); ++i) {
      const Section& W = br[T[i] - 1];
      for (int m = 1; m <= k; ++m) {
        Poly wm = W.component(m);
        if (wm.is_zero()) continue;
        std::vector<int> idxs(T.begin(), T.end());
        idxs[i] = m;
        auto sorted = detail::sort_with_sign(std::move(idxs));
        if (!sorted) continue;
        Poly coef = f * wm;
        if (sorted->second < 0) coef = -coef;
        result += basis_multivector(k, sorted->first).scaled(coef);
      }
    }
  }
  return result;
}

namespace {

// [f, e_U] = (-L_{s_{u1}} f) e_{U'} - e_{u1} ^ [f, e_{U'}], ending at
// [f, 1] = 0. Scalars commute out: [f, g e_U] = g [f, e_U].
Multivector bracket_function_basis(const Algebroid& A, const Poly& f,
                                   const IndexTuple& U) {
  int k = A.rank();
  if (U.empty()) return Multivector(k);
  IndexTuple rest(U.begin() + 1, U.end());
  Multivector out =
      basis_multivector(k, rest).scaled(-lie_basis(A, U[0], f));
  Multivector inner = bracket_function_basis(A, f, rest);
  if (!inner.is_zero()) {
    out -= wedge(basis_multivector(k, {U[0]}), inner);
  }
  return out;
}

Multivector schouten_terms(const Algebroid& A, const IndexTuple& T,
                           const Poly& f, const IndexTuple& U, const Poly& g);

Multivector schouten_q0(const Algebroid& A, const IndexTuple& T, const Poly& f,
                        const Poly& g) {
  // [P, g] = (-1)^p [g, P].
  Multivector r = bracket_function_basis(A, g, T).scaled(f);
  return (T.size() % 2 != 0) ? -r : r;
}

Multivector schouten_terms(const Algebroid& A, const IndexTuple& T,
                           const Poly& f, const IndexTuple& U, const Poly& g) {
  int k = A.rank();
  std::size_t p = T.size();
  std::size_t q = U.size();
  Multivector qterm = basis_multivector(k, U).scaled(g);
  if (p == 0 && q == 0) return Multivector(k);
  if (p == 0) return bracket_function_basis(A, f, U).scaled(g);
  if (q == 0) return schouten_q0(A, T, f, g);
  if (p == 1) return lie_multivector(A, basis_section(A, T[0], f), qterm);
  // [V ^ P', Q] = V ^ [P', Q] + (-1)^{(p-1)(q-1)} [V, Q] ^ P'.
  Section V = basis_section(A, T[0], f);
  IndexTuple Tp(T.begin() + 1, T.end());
  Multivector out = wedge(V.mv(), schouten_terms(A, Tp, Poly(1), U, g));
  Multivector vq = lie_multivector(A, V, qterm);
  if (!vq.is_zero()) {
    Multivector side = wedge(vq, basis_multivector(k, Tp));
    bool flip = ((p - 1) % 2 != 0) && ((q - 1) % 2 != 0);
    out += flip ? -side : side;
  }
  return out;
}

}  // namespace

Multivector schouten(const Algebroid& A, const Multivector& P,
                     const Multivector& Q) {
  check_value(A, P, "multivector");
  check_value(A, Q, "multivector");
  Multivector out(A.rank());
  for (const auto& [T, f] : P.components()) {
    for (const auto& [U, g] : Q.components()) {
      out += schouten_terms(A, T, f, U, g);
    }
  }
  return out;
}

Form lie_by_multivector(const Algebroid& A, const Multivector& P,
                        const Form& eta) {
  check_value(A, P, "multivector");
  check_value(A, eta, "form");
  Form out(A.rank());
  for (int p : P.degrees()) {
    Multivector part = P.part(p);
    Form a = interior(part, d_rho(A, eta));
    Form b = d_rho(A, interior(part, eta));
    out += (p % 2 != 0) ? a + b : a - b;
  }
  return out;
}

Multivector anchor_pushforward(const Algebroid& A, const Multivector& P) {
  check_value(A, P, "multivector");
  int n = A.dim();
  Multivector out(n);
  for (const auto& [T, f] : P.components()) {
    Multivector acc = Multivector::make(n, {{IndexTuple{}, f}});
    for (int r : T) {
      Multivector::Components row;
      for (int a = 1; a <= n; ++a) {
        const Poly& rho = A.anchor_entry(r, a);
        if (!rho.is_zero()) row.emplace(IndexTuple{a}, rho);
      }
      acc = wedge(acc, Multivector::make(n, std::move(row)));
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

}  // namespace algd
