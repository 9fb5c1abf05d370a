#include "algd/exterior.hpp"

#include <algorithm>

namespace algd {

namespace detail {

std::optional<std::pair<IndexTuple, int>> merge_disjoint(const IndexTuple& a,
                                                         const IndexTuple& b) {
  IndexTuple out;
  out.reserve(a.size() + b.size());
  // Inversions of the concatenation a|b relative to sorted order: one per
  // pair (x in a, y in b) with x > y; that count's parity is the sign.
  std::size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      inversions += static_cast<long>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return std::make_pair(std::move(out), inversions % 2 == 0 ? 1 : -1);
}

std::optional<std::pair<IndexTuple, int>> sort_with_sign(std::vector<int> idxs) {
  int sign = 1;
  for (std::size_t i = 1; i < idxs.size(); ++i) {
    for (std::size_t j = i; j > 0 && idxs[j] < idxs[j - 1]; --j) {
      std::swap(idxs[j], idxs[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idxs.size(); ++i) {
    if (idxs[i] == idxs[i - 1]) return std::nullopt;
  }
  return std::make_pair(std::move(idxs), sign);
}

}  // namespace detail

Section::Section(Multivector mv) : mv_(std::move(mv)) {
  if (!mv_.is_zero() && !mv_.is_homogeneous(1)) {
    throw DegreeError("section must be a pure degree-1 multivector");
  }
}

Section::Section(int rank, std::vector<Poly> comps) {
  if (static_cast<int>(comps.size()) != rank) {
    throw RankMismatchError("section component count differs from rank");
  }
  Multivector::Components c;
  for (int r = 1; r <= rank; ++r) {
    if (!comps[r - 1].is_zero()) c.emplace(IndexTuple{r}, std::move(comps[r - 1]));
  }
  mv_ = Multivector::make(rank, std::move(c));
}

namespace {

// i(e_r) eps_U: removes r from U at position pos with sign (-1)^pos.
std::optional<std::pair<IndexTuple, int>> drop_index(const IndexTuple& U, int r) {
  auto it = std::lower_bound(U.begin(), U.end(), r);
  if (it == U.end() || *it != r) return std::nullopt;
  int pos = static_cast<int>(it - U.begin());
  IndexTuple rest;
  rest.reserve(U.size() - 1);
  rest.insert(rest.end(), U.begin(), it);
  rest.insert(rest.end(), std::next(it), U.end());
  return std::make_pair(std::move(rest), pos % 2 == 0 ? 1 : -1);
}

}  // namespace

Form interior(const Multivector& P, const Form& eta) {
  if (P.rank() != eta.rank()) {
    throw RankMismatchError("interior product across different ranks");
  }
  Form::Components out;
  for (const auto& [T, p] : P.components()) {
    for (const auto& [U, f] : eta.components()) {
      if (T.size() > U.size()) continue;
      // i(e_T) = i(e_{t1}) o ... o i(e_{tp}); the rightmost factor acts
      // first, so peel T back to front.
      IndexTuple rest = U;
      int sign = 1;
      bool ok = true;
      for (auto it = T.rbegin(); it != T.rend(); ++it) {
        auto dropped = drop_index(rest, *it);
        if (!dropped) {
          ok = false;
          break;
        }
        rest = std::move(dropped->first);
        sign *= dropped->second;
      }
      if (!ok) continue;
      Poly val = p * f;
      if (sign < 0) val = -val;
      auto slot = out.find(rest);
      if (slot == out.end()) {
        out.emplace(std::move(rest), std::move(val));
      } else {
        slot->second += val;
      }
    }
  }
  return Form::make(eta.rank(), std::move(out));
}

Poly pairing(const Form& eta, const Multivector& P) {
  if (eta.rank() != P.rank()) {
    throw RankMismatchError("pairing across different ranks");
  }
  Poly sum;
  for (const auto& [T, f] : eta.components()) {
    auto it = P.components().find(T);
    if (it != P.components().end()) sum += f * it->second;
  }
  return sum;
}

Form graded_commutator_apply(const FormOperator& F, int degF,
                             const FormOperator& G, int degG, const Form& eta) {
  bool odd = (degF % 2 != 0) && (degG % 2 != 0);
  Form fg = F(G(eta));
  Form gf = G(F(eta));
  return odd ? fg + gf : fg - gf;
}

std::vector<IndexTuple> index_tuples(int rank, int size) {
  std::vector<IndexTuple> out;
  if (size < 0 || size > rank) return out;
  IndexTuple cur(size);
  // Lexicographic enumeration of strictly increasing tuples.
  std::function<void(int, int)> rec = [&](int slot, int from) {
    if (slot == size) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= rank - (size - slot - 1); ++v) {
      cur[slot] = v;
      rec(slot + 1, v + 1);
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace algd
