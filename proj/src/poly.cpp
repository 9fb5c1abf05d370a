#include "algd/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "algd/error.hpp"

namespace algd {

bool GradedLexLess::operator()(const std::vector<int>& a,
                               const std::vector<int>& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

namespace {

// Positions of `sub` inside `full`; both sorted, sub is a subset of full.
std::vector<int> positions(const std::vector<std::string>& sub,
                           const std::vector<std::string>& full) {
  std::vector<int> pos(sub.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    while (full[j] != sub[i]) ++j;
    pos[i] = static_cast<int>(j);
  }
  return pos;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Poly::Terms remap_terms(const Poly::Terms& terms, const std::vector<int>& pos,
                        std::size_t width) {
  Poly::Terms out;
  for (const auto& [exps, coef] : terms) {
    std::vector<int> e(width, 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[pos[i]] = exps[i];
    out.emplace(std::move(e), coef);
  }
  return out;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(std::vector<int>{}, c);
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.vars_ = {name};
  p.terms_.emplace(std::vector<int>{1}, Rational(1));
  return p;
}

Poly Poly::make(std::vector<std::string> vars, Terms terms) {
  Poly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [exps, coef] : terms_) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) used[i] = true;
    }
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> kept;
  std::vector<int> keep_idx;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) {
      kept.push_back(vars_[i]);
      keep_idx.push_back(static_cast<int>(i));
    }
  }
  Terms slim;
  for (const auto& [exps, coef] : terms_) {
    std::vector<int> e(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) e[i] = exps[keep_idx[i]];
    slim.emplace(std::move(e), coef);
  }
  vars_ = std::move(kept);
  terms_ = std::move(slim);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && vars_.empty());
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("constant_value on a non-constant polynomial");
  return terms_.begin()->second;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [exps, coef] : r.terms_) coef = -coef;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.vars_ = merge_vars(a.vars_, b.vars_);
  r.terms_ = remap_terms(a.terms_, positions(a.vars_, r.vars_), r.vars_.size());
  Poly::Terms tb =
      remap_terms(b.terms_, positions(b.vars_, r.vars_), r.vars_.size());
  for (const auto& [exps, coef] : tb) {
    auto [it, fresh] = r.terms_.emplace(exps, coef);
    if (!fresh) it->second += coef;
  }
  r.canonicalize();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.vars_ = merge_vars(a.vars_, b.vars_);
  std::size_t w = r.vars_.size();
  Poly::Terms ta = remap_terms(a.terms_, positions(a.vars_, r.vars_), w);
  Poly::Terms tb = remap_terms(b.terms_, positions(b.vars_, r.vars_), w);
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      std::vector<int> e(w);
      for (std::size_t i = 0; i < w; ++i) e[i] = ea[i] + eb[i];
      Rational prod = ca * cb;
      auto [it, fresh] = r.terms_.emplace(std::move(e), prod);
      if (!fresh) it->second += prod;
    }
  }
  r.canonicalize();
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) {
    if (!is_constant() || is_zero()) {
      throw DegreeError("negative exponent on a non-constant polynomial");
    }
    return Poly(constant_value().pow(e));
  }
  Poly acc(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    if (e > 1) base *= base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::partial(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return Poly();
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  Poly r;
  r.vars_ = vars_;
  for (const auto& [exps, coef] : terms_) {
    if (exps[idx] == 0) continue;
    std::vector<int> e = exps;
    e[idx] -= 1;
    Rational c = coef * Rational(exps[idx]);
    auto [pos, fresh] = r.terms_.emplace(std::move(e), c);
    if (!fresh) pos->second += c;
  }
  r.canonicalize();
  return r;
}

Rational Poly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) {
      throw MissingAssignmentError(
          vars_[i], "evaluation point does not assign variable '" + vars_[i] + "'");
    }
    vals[i] = it->second;
  }
  Rational sum(0);
  for (const auto& [exps, coef] : terms_) {
    Rational term = coef;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term *= vals[i].pow(exps[i]);
    }
    sum += term;
  }
  return sum;
}

Poly Poly::substitute(const std::string& var, const Poly& replacement) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  Poly sum;
  for (const auto& [exps, coef] : terms_) {
    Poly rest;
    rest.vars_ = vars_;
    std::vector<int> e = exps;
    int k = e[idx];
    e[idx] = 0;
    rest.terms_.emplace(std::move(e), coef);
    rest.canonicalize();
    sum += rest * replacement.pow(k);
  }
  return sum;
}

Poly Poly::rename(const std::map<std::string, std::string>& mapping) const {
  std::vector<std::string> renamed(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = mapping.find(vars_[i]);
    renamed[i] = (it == mapping.end()) ? vars_[i] : it->second;
  }
  std::vector<std::string> sorted = renamed;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw NameCollisionError("variable rename produced duplicate names");
  }
  std::vector<int> order(vars_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return renamed[a] < renamed[b]; });
  Poly r;
  r.vars_.resize(vars_.size());
  for (std::size_t i = 0; i < order.size(); ++i) r.vars_[i] = renamed[order[i]];
  for (const auto& [exps, coef] : terms_) {
    std::vector<int> e(exps.size());
    for (std::size_t i = 0; i < order.size(); ++i) e[i] = exps[order[i]];
    r.terms_.emplace(std::move(e), coef);
  }
  return r;
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [exps, coef] : terms_) {
    deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
  }
  return deg;
}

std::map<int, Poly> Poly::split_by_degree_in(
    const std::set<std::string>& subset) const {
  std::vector<bool> counted(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    counted[i] = subset.count(vars_[i]) > 0;
  }
  std::map<int, Poly> parts;
  for (const auto& [exps, coef] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (counted[i]) d += exps[i];
    }
    Poly piece;
    piece.vars_ = vars_;
    piece.terms_.emplace(exps, coef);
    piece.canonicalize();
    parts[d] += piece;
  }
  return parts;
}

bool Poly::depends_on(const std::string& var) const {
  return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex puts the leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coef] = *it;
    std::string mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (exps[i] != 1) mono += "^" + std::to_string(exps[i]);
    }
    Rational c = coef;
    bool negative = c.is_negative();
    if (negative) c = -c;
    std::string body;
    if (mono.empty()) {
      body = c.to_string();
    } else if (c.is_one()) {
      body = mono;
    } else {
      body = c.to_string() + "*" + mono;
    }
    if (first) {
      os << (negative ? "-" : "") << body;
      first = false;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.to_string();
}

}  // namespace algd
