#pragma once

#include <vector>

#include "surgtri/dedekind.hpp"

namespace surgtri {

/**
 * Symmetrized Alexander data of the zero-surgery, normalized so that
 * A(1) = |Torsion H_1(Y_0)|: the constant term is torsion_order - 2 sum a_j
 * and is reconstructed rather than stored, which makes the normalization an
 * identity.
 */
struct AlexanderData {
    Int torsion_order = 1;
    std::vector<Int> coeffs; // a_1, a_2, ...
};

AlexanderData make_alexander(const Int& torsion_order, std::vector<Int> coeffs);

struct SurgeryProblem {
    int n = 1;          // order of the knot class, per the torsion quotient
    Int p = 1;
    Int q = 0;          // coprime to p; q may be negative
    Int h1_order = 1;   // |H_1(Y, Z)|
    Rat lambda_bar_y;   // normalized Casson-Walker invariant of Y
    AlexanderData alexander;
};

SurgeryProblem make_surgery_problem(int n, const Int& p, const Int& q, const Int& h1_order,
                                    const Rat& lambda_bar_y, AlexanderData alexander);

// sum_j a_j j^2, the Alexander term of the surgery formulas
Int alexander_moment(const AlexanderData& data);

// s(p,q,n) = q (n^2 - 1) / (12 n^2) - p s(p,q) / 2
Rat s_pqn(const Int& p, const Int& q, int n);

// lambda_bar(Y_{p/q}) = p lambda_bar(Y) + q sum a_j j^2 + |H1| s(p,q,n)
Rat casson_walker_surgery(const SurgeryProblem& problem);

// sum SW_hat over Y_{p/q} from the base sums:
// p * sw_hat_sum_y + q * sw_sum_y0 + |H1| * s(p,q,n)
Rat sw_hat_sum_surgery(const SurgeryProblem& problem, const Rat& sw_hat_sum_y,
                       const Rat& sw_sum_y0);

// Nicolaescu's lens-space value: sum SW_hat over L(p,q) = -p s(p,q) / 2
Rat lens_space_sw_sum(const Int& p, const Int& q);

// The modeled correction-term difference sum xi(Y_{p/q}) - p sum xi(Y) -
// sum SF: only the u-average s(p,q,n) is determined by the surgery data;
// the per-u values are not computable from the closed forms.  The sf_sum
// argument is accepted for interface fidelity and does not enter.
Rat xi_difference_model(const Int& p, const Int& q, int n, const Rat& u_sigma, int sf_sum);

} // namespace surgtri
