#ifndef ALGD_POISSON_HPP
#define ALGD_POISSON_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algd/algebroid.hpp"
#include "algd/calculus.hpp"

namespace algd {

// Polynomial bivector on a chart, stored as the antisymmetric matrix
// L[i][j] = {x^i, x^j}. The degree-2 multivector view and the matrix view
// are interchangeable; construction takes the strict upper triangle.
class PoissonStructure {
public:
  PoissonStructure(std::vector<std::string> coords,
                   std::map<std::pair<int, int>, Poly> upper);

  static PoissonStructure from_bivector(std::vector<std::string> coords,
                                        const Multivector& mv);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::string>& coords() const { return coords_; }
  int coord_index(const std::string& name) const;  // 1-based, 0 if absent

  // Any index order; antisymmetry supplies the sign.
  Poly entry(int i, int j) const;

  Multivector as_bivector() const;

  friend bool operator==(const PoissonStructure& a, const PoissonStructure& b) {
    return a.coords_ == b.coords_ && a.lambda_ == b.lambda_;
  }
  friend bool operator!=(const PoissonStructure& a, const PoissonStructure& b) {
    return !(a == b);
  }

private:
  std::vector<std::string> coords_;
  std::vector<std::vector<Poly>> lambda_;
};

// TM as an algebroid over its own chart: identity anchor, zero structure
// functions, basis sections named e1..en. A chart that already uses one of
// those names moves the frame to #e1..#en (and so on), keeping every chart
// usable; '#' cannot appear in definition files.
Algebroid tangent_algebroid(const std::vector<std::string>& coords);

// {f, g} = <d f ^ d g, L> through the bivector pairing.
Poly poisson_bracket(const PoissonStructure& L, const Poly& f, const Poly& g);

// Exact [L, L] via the Schouten bracket over the tangent algebroid; valid
// iff every trivector component vanishes.
CheckReport is_poisson(const PoissonStructure& L);

// L#: (L# alpha)^b = sum_i alpha_i L[i][b] for a 1-form alpha.
VectorField sharp(const PoissonStructure& L, const Form& alpha);

// Wedge-multiplicative extension of L# to all forms on the chart.
Multivector sharp_extend(const PoissonStructure& L, const Form& eta);

// Cotangent algebroid of a Poisson chart: sections d<coord>, anchor row i
// equal to L[i][.], structure functions dL[i][j]/dx^m. Requires is_poisson.
Algebroid cotangent_algebroid(const PoissonStructure& L);

// delta_L = [L, .]; a differential exactly when L is Poisson (required).
Multivector lichnerowicz(const PoissonStructure& L, const Multivector& Q);

}  // namespace algd

#endif
