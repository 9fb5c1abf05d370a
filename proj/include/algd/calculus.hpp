#ifndef ALGD_CALCULUS_HPP
#define ALGD_CALCULUS_HPP

#include "algd/algebroid.hpp"
#include "algd/exterior.hpp"

namespace algd {

// Exterior derivative d_rho. On functions <d_rho f, s_r> = L_{rho o s_r} f;
// on a p-form the alternating sum of Lie derivatives of evaluations plus the
// bracket-insertion terms. Mixed degrees are handled per homogeneous part.
Form d_rho(const Algebroid& A, const Form& eta);
Form d_rho(const Algebroid& A, const Poly& f);

// (L_V eta)(s_T) = L_{rho o V}(eta(s_T)) - sum_i eta(..., {V, s_i}, ...).
Form lie_form(const Algebroid& A, const Section& V, const Form& eta);

// Degree-0 derivation of the multivector algebra with L_V W = {V, W}.
Multivector lie_multivector(const Algebroid& A, const Section& V,
                            const Multivector& P);

// Schouten bracket, computed by recursive expansion through the graded
// Leibniz rules: [V ^ P', Q] = V ^ [P', Q] + (-1)^{(p-1)(q-1)} [V, Q] ^ P',
// with [V, Q] = L_V Q and [f, Q] peeled off factor by factor. The operator
// identity i([P,Q]) = [[i(P), d_rho], i(Q)] is the test oracle, not the
// computation path.
Multivector schouten(const Algebroid& A, const Multivector& P,
                     const Multivector& Q);

// L_P = [i(P), d_rho] acting on forms, degree 1 - p per homogeneous part.
Form lie_by_multivector(const Algebroid& A, const Multivector& P,
                        const Form& eta);

// rho o P: wedge-multiplicative extension of the anchor, landing in
// multivector fields over the tangent algebroid of the base chart.
Multivector anchor_pushforward(const Algebroid& A, const Multivector& P);

}  // namespace algd

#endif
