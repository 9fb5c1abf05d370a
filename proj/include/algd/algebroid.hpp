#ifndef ALGD_ALGEBROID_HPP
#define ALGD_ALGEBROID_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algd/exterior.hpp"
#include "algd/poly.hpp"
#include "algd/report.hpp"

namespace algd {

// Vector field on the base chart: one Poly per coordinate, chart order.
struct VectorField {
  std::vector<Poly> comps;

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.comps == b.comps;
  }
  friend bool operator!=(const VectorField& a, const VectorField& b) {
    return !(a == b);
  }
};

// V f = sum_a V^a df/dx^a.
Poly apply_vector_field(const VectorField& v,
                        const std::vector<std::string>& coords, const Poly& f);

// [V, W]^a = sum_b (V^b dW^a - W^b dV^a).
VectorField vector_field_bracket(const VectorField& v, const VectorField& w,
                                 const std::vector<std::string>& coords);

// Lie algebroid over one global polynomial chart: base coordinates x^1..x^n
// (declaration order), basis sections s_1..s_k, anchor matrix rho[r][a] and
// structure functions c[i][j][m] with {s_i, s_j} = sum_m c[i][j][m] s_m.
// Construction normalizes c to be antisymmetric in (i, j); validity of the
// axioms is a separate question answered by check_axioms.
class Algebroid {
public:
  // `structure` maps 1-based (i, j) with i < j to the k component polys.
  Algebroid(std::vector<std::string> coords, std::vector<std::string> sections,
            std::vector<std::vector<Poly>> anchor,
            std::map<std::pair<int, int>, std::vector<Poly>> structure);

  int dim() const { return static_cast<int>(coords_.size()); }
  int rank() const { return static_cast<int>(sections_.size()); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<std::string>& sections() const { return sections_; }

  // 1-based accessors; c handles any index order through antisymmetry.
  const Poly& anchor_entry(int r, int a) const;
  Poly c(int i, int j, int m) const;

  int section_index(const std::string& name) const;  // 1-based, 0 if absent
  int coord_index(const std::string& name) const;    // 1-based, 0 if absent

  // Same data with renamed basis sections; geometry untouched.
  Algebroid with_section_names(std::vector<std::string> names) const;

  friend bool operator==(const Algebroid& a, const Algebroid& b);
  friend bool operator!=(const Algebroid& a, const Algebroid& b) {
    return !(a == b);
  }

private:
  std::vector<std::string> coords_;
  std::vector<std::string> sections_;
  std::vector<std::vector<Poly>> anchor_;            // k x n
  std::vector<std::vector<std::vector<Poly>>> c_;    // k x k x k
};

// rho o s.
VectorField anchor_apply(const Algebroid& A, const Section& s);

// L_{rho o s} f.
Poly lie_scalar(const Algebroid& A, const Section& s, const Poly& f);

// Coordinate bracket {X, Y}: bilinear over constants, Leibniz in each
// polynomial coefficient through the anchor.
Section bracket_sections(const Algebroid& A, const Section& X, const Section& Y);

// Anchor-homomorphism and Jacobi residuals on basis pairs/triples.
CheckReport check_axioms(const Algebroid& A);

// Degree-1 derivation of the form algebra, recorded by its action on the
// chart generators: delta(x^a) is a 1-form, delta(eps^r) a 2-form. apply()
// extends it to any polynomial-coefficient form by the graded Leibniz rule.
class Derivation1 {
public:
  Derivation1(std::vector<std::string> coords, int rank,
              std::vector<Form> on_functions, std::vector<Form> on_coforms);

  const std::vector<std::string>& coords() const { return coords_; }
  int rank() const { return rank_; }
  const Form& on_function(int a) const { return on_functions_[a - 1]; }
  const Form& on_coform(int r) const { return on_coforms_[r - 1]; }

  Form apply(const Form& eta) const;
  Form apply(const Poly& f) const;

  friend bool operator==(const Derivation1& a, const Derivation1& b);

private:
  std::vector<std::string> coords_;
  int rank_;
  std::vector<Form> on_functions_;  // n entries, degree <= 1
  std::vector<Form> on_coforms_;    // k entries, degree <= 2
};

// The exterior derivative of A packaged as generator data. Requires a valid
// algebroid (InvalidAlgebroidError otherwise).
Derivation1 to_derivation(const Algebroid& A);

// Reads anchor and structure functions back off a square-zero degree-1
// derivation: rho[r][a] = <delta x^a, s_r>, c[i][j][m] = -<delta eps^m,
// s_i ^ s_j>, the sign fixed so from_derivation(to_derivation(A)) = A.
// Throws SquareNonzeroError naming the first generator with delta^2 != 0.
Algebroid from_derivation(const std::vector<std::string>& sections,
                          const Derivation1& delta);

}  // namespace algd

#endif
