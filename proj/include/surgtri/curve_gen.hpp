#pragma once

#include <cstdint>

#include "surgtri/curve.hpp"

namespace surgtri {

struct CurveGenParams {
    int n = 1;
    Rat u_sigma;        // reducible endpoints sit here exactly
    int arcs = 1;
    int loops = 1;
    int bad_arcs = 0;   // additional arcs running into the bad point
    int max_interior = 4;
    std::uint64_t seed = 0;
};

/**
 * Deterministic seeded generator of generic boundary curves.
 *
 * Interior vertex coordinates live on the grid Z + {1..96}/97.  Every
 * counting target in a surgery configuration carries a 97-free denominator
 * (eta, eps, theta coordinates), so vertices land off all query lines by
 * arithmetic, not by chance; u-fractions and v-fractions are drawn from
 * disjoint ranges so v - u is never an integer.  The same seed always
 * produces the same curve.
 */
BoundaryCurve random_boundary_curve(const CurveGenParams& params);

} // namespace surgtri
