#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surgtri/torus.hpp"

namespace surgtri {

enum class ProfileKind { Basic, Refined };

/**
 * Piecewise-linear surgery perturbation profile.
 *
 * Basic profile (torsion-free direction, period 2, zero rise): the flat
 * zone carries slope 1 - eps through the origin, so the approximation bound
 * |f'(t) - t| <= eps(1-eps) < eps holds strictly on [-1+eps, 1-eps], and a
 * steep return wall through (1, 0) restores periodicity.  The wall makes
 * the profile antisymmetric about (1, 0): f'(1-t) = -f'(1+t), the derivative
 * form of the mirror symmetry of the underlying primitive.
 *
 * Refined profile (order n, offset p, period 2n, rise 4n): diagonal pieces
 * v = t + 1 - delta hugging the Y1-line from below, and walls of width
 * 2 eps rising 2n + 2 eps at t = 2p mod 2n.  As eps -> 0 the graph
 * converges to the Y1-line v = u + 1 together with the vertical lines
 * u = 2(nk + p).
 *
 * Breakpoints store one closed period [t0, t0 + period_len]; evaluation
 * extends by f(t + period_len) = f(t) + period_rise.
 */
struct PerturbationProfile {
    ProfileKind kind = ProfileKind::Basic;
    int n = 1;
    int p_offset = 0;
    Rat eps;
    Rat diag_offset; // delta = eps/2 for the refined profile, 0 for basic
    std::vector<std::pair<Rat, Rat>> breakpoints;
    Rat period_len;
    Rat period_rise;
};

// Requires 0 < eps < 1/2.
PerturbationProfile build_basic_profile(const Rat& eps);

// Requires 0 < eps <= 1/4 and 0 <= p_offset < n.
PerturbationProfile build_refined_profile(int n, int p_offset, const Rat& eps);

// Exact evaluation honoring the periodic extension.
Rat eval_profile(const PerturbationProfile& profile, const Rat& t);

// The eps -> 0 limit line set of a refined profile, one representative per
// 2n-period: the Y1-line v = u + 1 and the Y0-line u = 2 p_offset; the full
// wall family is the representative translated by 2n Z in u.
std::vector<ReducibleLine> limit_lines(const PerturbationProfile& profile);

/**
 * The perturbed reducible curve of (Y, sigma oplus L_m):
 * v = f'(u - eta) + eta + 2m.  Counting functions enumerate its PL pieces
 * over any u-window together with the 2n Z translates in v that realize the
 * projection to CYL_V(n).
 */
struct PerturbedCurve {
    PerturbationProfile profile;
    Rat eta;
    Int m;

    Rat value_at(const Rat& u) const;
};

struct ProfileCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Verifies the profile contract exactly at breakpoints (and midpoints,
// where the piecewise-linear sup can also be attained): periodicity, range
// and mirror behavior for the basic profile; periodic rise, eps-tube around
// the limit lines and transversal wall slopes for the refined profile.
ProfileCheckReport verify_profile_contract(const PerturbationProfile& profile);

} // namespace surgtri
