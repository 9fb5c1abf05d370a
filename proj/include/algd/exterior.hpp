#ifndef ALGD_EXTERIOR_HPP
#define ALGD_EXTERIOR_HPP

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "algd/error.hpp"
#include "algd/poly.hpp"

namespace algd {

// Strictly increasing 1-based indices into the rank-k basis. The empty tuple
// is the degree-0 slot.
using IndexTuple = std::vector<int>;

// Degree first, then lexicographic; fixes component iteration and rendering.
struct TupleOrder {
  bool operator()(const IndexTuple& a, const IndexTuple& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

namespace detail {
// Union of two disjoint increasing tuples with the sign of the sorting
// permutation; nullopt when they share an index.
std::optional<std::pair<IndexTuple, int>> merge_disjoint(const IndexTuple& a,
                                                         const IndexTuple& b);
// Sorts an arbitrary index list, returning the permutation sign, or nullopt
// on a repeated index.
std::optional<std::pair<IndexTuple, int>> sort_with_sign(std::vector<int> idxs);
}  // namespace detail

// Exterior-algebra element of rank k with Poly coefficients, possibly of
// mixed degree. Tag separates contravariant values (multivectors, basis
// e1..ek) from covariant ones (forms, basis eps1..epsk); the algebra is the
// same, the pairing below couples them.
template <typename Tag>
class Graded {
public:
  using Components = std::map<IndexTuple, Poly, TupleOrder>;

  Graded() = default;
  explicit Graded(int rank) : rank_(rank) {}

  static Graded make(int rank, Components comps) {
    Graded g(rank);
    for (auto& [tuple, coef] : comps) {
      if (coef.is_zero()) continue;
      check_tuple(tuple, rank);
      g.comps_.emplace(tuple, std::move(coef));
    }
    return g;
  }

  int rank() const { return rank_; }
  const Components& components() const { return comps_; }

  Poly component(const IndexTuple& t) const {
    auto it = comps_.find(t);
    return it == comps_.end() ? Poly() : it->second;
  }

  bool is_zero() const { return comps_.empty(); }

  // Degrees with a nonzero component, ascending.
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [tuple, coef] : comps_) {
      int d = static_cast<int>(tuple.size());
      if (out.empty() || out.back() != d) out.push_back(d);
    }
    return out;
  }

  bool is_homogeneous(int degree) const {
    for (const auto& [tuple, coef] : comps_) {
      if (static_cast<int>(tuple.size()) != degree) return false;
    }
    return true;
  }

  Graded part(int degree) const {
    Graded g(rank_);
    for (const auto& [tuple, coef] : comps_) {
      if (static_cast<int>(tuple.size()) == degree) g.comps_.emplace(tuple, coef);
    }
    return g;
  }

  Graded operator-() const {
    Graded g(rank_);
    for (const auto& [tuple, coef] : comps_) g.comps_.emplace(tuple, -coef);
    return g;
  }

  friend Graded operator+(const Graded& a, const Graded& b) {
    check_ranks(a, b);
    Graded g(a.rank_);
    g.comps_ = a.comps_;
    for (const auto& [tuple, coef] : b.comps_) {
      auto [it, fresh] = g.comps_.emplace(tuple, coef);
      if (!fresh) it->second += coef;
    }
    g.drop_zeros();
    return g;
  }

  friend Graded operator-(const Graded& a, const Graded& b) { return a + (-b); }

  Graded& operator+=(const Graded& o) { return *this = *this + o; }
  Graded& operator-=(const Graded& o) { return *this = *this - o; }

  Graded scaled(const Poly& f) const {
    Graded g(rank_);
    if (f.is_zero()) return g;
    for (const auto& [tuple, coef] : comps_) {
      Poly p = coef * f;
      if (!p.is_zero()) g.comps_.emplace(tuple, std::move(p));
    }
    return g;
  }

  friend bool operator==(const Graded& a, const Graded& b) {
    return a.rank_ == b.rank_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const Graded& a, const Graded& b) { return !(a == b); }

  // Shuffle-convention exterior product; no factorial normalization, the
  // degree-0 part acts by scalar multiplication.
  friend Graded wedge(const Graded& a, const Graded& b) {
    check_ranks(a, b);
    Graded g(a.rank_);
    for (const auto& [ta, ca] : a.comps_) {
      for (const auto& [tb, cb] : b.comps_) {
        auto merged = detail::merge_disjoint(ta, tb);
        if (!merged) continue;
        Poly p = ca * cb;
        if (merged->second < 0) p = -p;
        auto it = g.comps_.find(merged->first);
        if (it == g.comps_.end()) {
          g.comps_.emplace(merged->first, std::move(p));
        } else {
          it->second += p;
        }
      }
    }
    g.drop_zeros();
    return g;
  }

private:
  int rank_ = 0;
  Components comps_;

  static void check_tuple(const IndexTuple& t, int rank) {
    int prev = 0;
    for (int idx : t) {
      if (idx <= prev || idx > rank) {
        throw DegreeError("index tuple must be strictly increasing within 1..rank");
      }
      prev = idx;
    }
  }

  static void check_ranks(const Graded& a, const Graded& b) {
    if (a.rank_ != b.rank_) {
      throw RankMismatchError("graded values have different ranks");
    }
  }

  void drop_zeros() {
    for (auto it = comps_.begin(); it != comps_.end();) {
      it = it->second.is_zero() ? comps_.erase(it) : std::next(it);
    }
  }

  template <typename T>
  friend class Graded;
};

struct MultiTag;
struct FormTag;
using Multivector = Graded<MultiTag>;
using Form = Graded<FormTag>;

// Degree-1 multivector: a section of the bundle in the chosen basis.
class Section {
public:
  Section() = default;
  explicit Section(Multivector mv);
  Section(int rank, std::vector<Poly> comps);

  const Multivector& mv() const { return mv_; }
  int rank() const { return mv_.rank(); }
  Poly component(int r) const { return mv_.component({r}); }
  bool is_zero() const { return mv_.is_zero(); }

  friend bool operator==(const Section& a, const Section& b) {
    return a.mv_ == b.mv_;
  }
  friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }

private:
  Multivector mv_;
};

// i(P)eta. For a basis section, i(e_r) drops the index with the sign of its
// position; decomposables act by composition i(P1 ^ ... ^ Pp) = i(P1) o ...
// o i(Pp); the degree-0 part multiplies.
Form interior(const Multivector& P, const Form& eta);

// <eta, P>: zero across distinct degrees, determinant convention on
// decomposables, which on the increasing basis reads <eps_T, e_U> = [T = U].
Poly pairing(const Form& eta, const Multivector& P);

using FormOperator = std::function<Form(const Form&)>;

// [F, G] eta = F(G eta) - (-1)^{deg F * deg G} G(F eta).
Form graded_commutator_apply(const FormOperator& F, int degF,
                             const FormOperator& G, int degG, const Form& eta);

// All strictly increasing tuples of the given size over 1..rank, in order.
std::vector<IndexTuple> index_tuples(int rank, int size);

}  // namespace algd

#endif
