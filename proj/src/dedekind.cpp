#include "surgtri/dedekind.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace surgtri {

Rat sawtooth(const Rat& x) {
    if (x.is_integer()) return Rat(0);
    return x - Rat(x.floor()) - Rat(1, 2);
}

Rat dedekind_sum(const Int& p, const Int& q) {
    if (p < 1 || q < 1) throw precondition_error("dedekind_sum: p and q must be positive");
    if (boost::multiprecision::gcd(p, q) != 1)
        throw precondition_error("dedekind_sum: p and q must be coprime");

    // sum over i of ((i/q))((pi/q)) with ((i/q)) = (2i - q)/(2q) for
    // 0 < i < q; the residue p*i mod q never vanishes since gcd(p,q) = 1.
    const Int pm = p % q;
    Int acc = 0;
    Int r = 0;
    for (Int i = 1; i < q; ++i) {
        r += pm;
        if (r >= q) r -= q;
        acc += (2 * i - q) * (2 * r - q);
    }
    return Rat(acc, 4 * q * q);
}

Rat dedekind_term(const Int& p, const Int& q) {
    if (q == 0) throw precondition_error("dedekind_term: zero modulus");
    const Int Q = boost::multiprecision::abs(q);
    Int pr = p % Q;
    if (pr < 0) pr += Q;
    if (Q == 1) return Rat(0);
    if (pr == 0 || boost::multiprecision::gcd(pr, Q) != 1)
        throw precondition_error("dedekind_term: arguments must be coprime");
    // ((i/-q))((pi/-q)) = (-((i/q)))(-((pi/q))): even in the sign of q.
    return dedekind_sum(pr, Q);
}

Rat dedekind_reciprocity_rhs(const Int& p, const Int& q) {
    const Rat pr{p}, qr{q};
    return Rat(-1, 4) + (pr / qr + qr / pr + Rat(1) / (pr * qr)) / Rat(12);
}

} // namespace surgtri
