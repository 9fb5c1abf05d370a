#ifndef ALGD_DUALITY_HPP
#define ALGD_DUALITY_HPP

#include <string>
#include <vector>

#include "algd/poisson.hpp"

namespace algd {

// Chart of a dual bundle: base coordinates followed by fiber coordinates.
// The fiber coordinate for a basis section keeps the section's name, so the
// linear-Poisson dictionary needs no rename table.
struct DualChart {
  std::vector<std::string> base;
  std::vector<std::string> fiber;

  std::vector<std::string> all() const;

  friend bool operator==(const DualChart& a, const DualChart& b) {
    return a.base == b.base && a.fiber == b.fiber;
  }
  friend bool operator!=(const DualChart& a, const DualChart& b) {
    return !(a == b);
  }
};

DualChart dual_chart(const Algebroid& A);

// Fiberwise-linear function on a dual chart: every monomial carries fiber
// degree exactly one.
class VerticalFunction {
public:
  VerticalFunction(DualChart chart, Poly value);

  const DualChart& chart() const { return chart_; }
  const Poly& value() const { return value_; }

  friend bool operator==(const VerticalFunction& a, const VerticalFunction& b) {
    return a.chart_ == b.chart_ && a.value_ == b.value_;
  }
  friend bool operator!=(const VerticalFunction& a, const VerticalFunction& b) {
    return !(a == b);
  }

private:
  DualChart chart_;
  Poly value_;
};

// The section X as the linear function sum_r X^r xi_r on the dual chart.
VerticalFunction vertical_function(const Algebroid& A, const Section& X);

// Linear Poisson structure on the dual chart: {xi_i, xi_j} = sum_m c^m_ij
// xi_m, {xi_r, x^a} = anchor entry, {x^a, x^b} = 0. Requires valid axioms.
PoissonStructure dual_poisson(const Algebroid& A);

// Residuals of [Z, L] + L for the fiber Euler field Z = sum xi_r d/dxi_r.
// Zero exactly when L is fiberwise linear with respect to the given fibers.
CheckReport euler_homogeneity_check(const PoissonStructure& L,
                                    const std::vector<std::string>& fiber_vars);

// Inverse dictionary: reads anchor and structure functions off a fiberwise
// linear Poisson chart. Degree faults in a specific bracket raise
// DegreeViolationError naming it; a residual Euler failure raises
// HomogeneityError.
Algebroid algebroid_from_dual_poisson(const PoissonStructure& L,
                                      const DualChart& chart);

// Pulls momenta back along the anchor transpose into the canonical dual of
// the tangent algebroid and compares brackets pairwise on chart generators.
// Residuals vanish exactly when the anchor-homomorphism axiom holds.
CheckReport transpose_anchor_check(const Algebroid& A);

}  // namespace algd

#endif
