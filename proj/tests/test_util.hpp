#ifndef ALGD_TEST_UTIL_HPP
#define ALGD_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "algd/exterior.hpp"
#include "algd/poly.hpp"

// Deterministic inputs for the property tests; every suite seeds its own
// mt19937_64 so failures reproduce bit for bit.
namespace testutil {

inline algd::Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-6, 6);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  return algd::Rational(num(rng), den(rng));
}

inline algd::Poly random_poly(std::mt19937_64& rng,
                              const std::vector<std::string>& vars,
                              int max_degree = 2, int terms = 3) {
  algd::Poly out;
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    algd::Poly mono(random_rational(rng));
    for (const auto& v : vars) mono *= algd::Poly::variable(v).pow(deg(rng));
    out += mono;
  }
  return out;
}

inline algd::IndexTuple random_tuple(std::mt19937_64& rng, int rank,
                                     int degree) {
  std::vector<int> all(rank);
  for (int i = 0; i < rank; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  algd::IndexTuple t(all.begin(), all.begin() + degree);
  std::sort(t.begin(), t.end());
  return t;
}

template <typename GradedT>
GradedT random_graded(std::mt19937_64& rng, int rank,
                      const std::vector<std::string>& vars,
                      const std::vector<int>& degrees, int terms_per_degree = 2) {
  typename GradedT::Components comps;
  for (int d : degrees) {
    for (int t = 0; t < terms_per_degree; ++t)
      comps[random_tuple(rng, rank, d)] = random_poly(rng, vars, 1, 2);
  }
  return GradedT::make(rank, std::move(comps));
}

inline algd::Multivector random_multivector(std::mt19937_64& rng, int rank,
                                            const std::vector<std::string>& vars,
                                            const std::vector<int>& degrees) {
  return random_graded<algd::Multivector>(rng, rank, vars, degrees);
}

inline algd::Form random_form(std::mt19937_64& rng, int rank,
                              const std::vector<std::string>& vars,
                              const std::vector<int>& degrees) {
  return random_graded<algd::Form>(rng, rank, vars, degrees);
}

inline algd::Section random_section(std::mt19937_64& rng, int rank,
                                    const std::vector<std::string>& vars) {
  std::vector<algd::Poly> comps;
  comps.reserve(rank);
  for (int r = 0; r < rank; ++r)
    comps.push_back(random_poly(rng, vars, 1, 2));
  return algd::Section(rank, std::move(comps));
}

}  // namespace testutil

#endif
