#ifndef ALGD_LIFTS_HPP
#define ALGD_LIFTS_HPP

#include "algd/duality.hpp"
#include "algd/poisson.hpp"

namespace algd {

// Tangent lift to the chart (x, xdot). Base-base brackets vanish,
// {x^a, xdot^b} = L[a][b], {xdot^i, xdot^j} = sum_k dL[i][j]/dx^k xdot^k.
// Requires is_poisson; the lift is then Poisson again.
PoissonStructure tangent_lift_poisson(const PoissonStructure& L);

// Tangent lift to base (x, xdot) and rank 2k: complete lifts sdot first,
// then vertical copies s. Requires valid axioms.
Algebroid tangent_lift_algebroid(const Algebroid& A);

// Complete lift of a section into the lifted basis: X^r on the sdot slots,
// sum_a dX^r/dx^a xdot^a on the vertical slots.
Section complete_lift_section(const Algebroid& A, const Section& X);

}  // namespace algd

#endif
