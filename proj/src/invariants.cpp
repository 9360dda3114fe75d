#include "surgtri/invariants.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace surgtri {

AlexanderData make_alexander(const Int& torsion_order, std::vector<Int> coeffs) {
    if (torsion_order < 1)
        throw precondition_error("alexander data: torsion order must be positive");
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return AlexanderData{torsion_order, std::move(coeffs)};
}

SurgeryProblem make_surgery_problem(int n, const Int& p, const Int& q, const Int& h1_order,
                                    const Rat& lambda_bar_y, AlexanderData alexander) {
    if (n < 1) throw precondition_error("surgery problem: n must be positive");
    if (p < 1) throw precondition_error("surgery problem: p must be >= 1");
    if (boost::multiprecision::gcd(p, boost::multiprecision::abs(q)) != 1)
        throw precondition_error("surgery problem: p and q must be coprime");
    if (h1_order < 1) throw precondition_error("surgery problem: |H1| must be positive");
    return SurgeryProblem{n, p, q, h1_order, lambda_bar_y, std::move(alexander)};
}

Int alexander_moment(const AlexanderData& data) {
    Int total = 0;
    for (size_t j = 0; j < data.coeffs.size(); ++j)
        total += data.coeffs[j] * Int(j + 1) * Int(j + 1);
    return total;
}

Rat s_pqn(const Int& p, const Int& q, int n) {
    if (n < 1) throw precondition_error("s_pqn: n must be positive");
    if (p < 1) throw precondition_error("s_pqn: p must be >= 1");
    if (boost::multiprecision::gcd(p, boost::multiprecision::abs(q)) != 1)
        throw precondition_error("s_pqn: p and q must be coprime");
    const Rat dedekind = (q == 0) ? Rat(0) : dedekind_term(p, q);
    return Rat(q) * Rat(Int(n) * Int(n) - 1, Int(12) * Int(n) * Int(n)) -
           Rat(p) * dedekind / Rat(2);
}

Rat casson_walker_surgery(const SurgeryProblem& problem) {
    // assembled term by term from the surgery formula; the dual route in
    // sw_hat_sum_surgery goes through s_pqn instead
    const Int nn = Int(problem.n) * Int(problem.n);
    const Rat eta_term = Rat(problem.q) * Rat(nn - 1, 12 * nn);
    const Rat dedekind = (problem.q == 0) ? Rat(0) : dedekind_term(problem.p, problem.q);
    const Rat dedekind_half = Rat(problem.p) * dedekind / Rat(2);
    return Rat(problem.p) * problem.lambda_bar_y +
           Rat(problem.q) * Rat(alexander_moment(problem.alexander)) +
           Rat(problem.h1_order) * (eta_term - dedekind_half);
}

Rat sw_hat_sum_surgery(const SurgeryProblem& problem, const Rat& sw_hat_sum_y,
                       const Rat& sw_sum_y0) {
    return Rat(problem.p) * sw_hat_sum_y + Rat(problem.q) * sw_sum_y0 +
           Rat(problem.h1_order) * s_pqn(problem.p, problem.q, problem.n);
}

Rat lens_space_sw_sum(const Int& p, const Int& q) {
    if (p < 1) throw precondition_error("lens_space_sw_sum: p must be >= 1");
    if (boost::multiprecision::gcd(p, boost::multiprecision::abs(q)) != 1)
        throw precondition_error("lens_space_sw_sum: p and q must be coprime");
    if (q == 0) return Rat(0); // L(1,0) = S^3
    return -Rat(p) * dedekind_term(p, q) / Rat(2);
}

Rat xi_difference_model(const Int& p, const Int& q, int n, const Rat& u_sigma, int sf_sum) {
    (void)sf_sum; // the SF term is already subtracted in the definition
    const Rat slot = u_sigma * Rat(n) / Rat(2);
    if (!slot.is_integer() || slot < Rat(0) || slot >= Rat(n))
        throw precondition_error(
            "xi_difference_model: u_sigma must be one of 0, 2/n, ..., 2(n-1)/n");
    return s_pqn(p, q, n);
}

} // namespace surgtri
