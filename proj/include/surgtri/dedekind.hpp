#pragma once

#include "surgtri/rat.hpp"

namespace surgtri {

/**
 * The sawtooth function ((x)): x - floor(x) - 1/2 for non-integer x, and 0
 * at integers.  Odd, 1-periodic.
 */
Rat sawtooth(const Rat& x);

/**
 * Dedekind sum s(p,q) = sum_{i=1}^{q-1} ((i/q)) ((p i / q)).
 *
 * The second argument is the modulus; this convention is used uniformly
 * across the library.  Requires p, q >= 1 and gcd(p, q) = 1.
 *
 * Evaluated as a single integer accumulation over the common denominator
 * 4q^2, which is the direct O(q) summation with the rational bookkeeping
 * pulled out of the loop.
 */
Rat dedekind_sum(const Int& p, const Int& q);

/**
 * s(p,q) extended to arbitrary nonzero modulus and arbitrary p coprime to
 * it, via periodicity in p and evenness in the sign of q.  This is what the
 * surgery formulas consume, where q may be negative.
 */
Rat dedekind_term(const Int& p, const Int& q);

// Right-hand side of Dedekind reciprocity:
//   s(p,q) + s(q,p) = -1/4 + (p/q + q/p + 1/(pq)) / 12.
Rat dedekind_reciprocity_rhs(const Int& p, const Int& q);

} // namespace surgtri
