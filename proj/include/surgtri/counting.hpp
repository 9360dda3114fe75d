#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surgtri/curve.hpp"
#include "surgtri/perturbation.hpp"
#include "surgtri/torus.hpp"

namespace surgtri {

/**
 * A family of parallel lines in the plane, { X : <normal, X> = c0 + step j }
 * for j in Z (step 0 means a single line), together with a fixed tangent
 * orientation.  Every straight counting target -- reducible lines lifted to
 * CYL_V(n), slope curves pulled back from the torus, vertical circles --
 * is one of these.
 */
struct LineFamily {
    Rat nu, nv;   // normal
    Rat du, dv;   // oriented tangent, <normal, tangent> = 0
    Rat c0;
    Rat step;
    std::string name;
};

// Reducible line as a counting target in CYL_V(n).  With sum_family = true
// the whole k-family is counted at once (the fiber product over the torus),
// otherwise only the lifts of the single structure k.
LineFamily line_family(const ReducibleLine& line, int n, bool sum_family);

// The eta-shifted p/q-curve pulled back from the torus.
LineFamily slope_family(const SlopeCurve& curve, const Rat& vshift);

// The vertical circle u = c pulled back from the torus, oriented upward.
LineFamily vertical_family(const Rat& c);

struct Crossing {
    size_t component = 0;
    size_t segment = 0;
    Rat t;             // parameter in [0,1] along the segment
    TorusPoint point;  // plane coordinates
    int sign = 0;      // sgn det[curve tangent, target tangent]

    // target bookkeeping
    enum class Piece { Line, Diag, Wall } piece = Piece::Line;
    Rat level;         // the line value c, the diagonal's Y1-level, or the wall center u
    Int copy = 0;      // which 2nZ v-translate of a perturbed curve was hit

    bool operator<(const Crossing& o) const {
        if (component != o.component) return component < o.component;
        if (segment != o.segment) return segment < o.segment;
        if (t != o.t) return t < o.t;
        if (piece != o.piece) return static_cast<int>(piece) < static_cast<int>(o.piece);
        if (level != o.level) return level < o.level;
        return copy < o.copy;
    }
};

// All transverse crossings of the curve with the family; throws
// genericity_error when a curve vertex lies on the target or a segment
// overlaps it.
std::vector<Crossing> line_crossings(const BoundaryCurve& curve, const LineFamily& family);

// Crossings with the perturbed Y-curve v = f'(u - eta) + eta + 2m,
// including its 2nZ v-translates.  Diag crossings carry the Y1-level
// v - u = level they hug; Wall crossings carry the wall center u = level.
std::vector<Crossing> perturbed_crossings(const BoundaryCurve& curve,
                                          const PerturbedCurve& target);

int signed_count(const BoundaryCurve& curve, const LineFamily& family);
int signed_count(const BoundaryCurve& curve, const PerturbedCurve& target);

struct SpectralFlow {
    int value = 0;
    Rat from, to;  // interval endpoints in CYL_V(n) coordinates
    int lift_k = 0;
};

/**
 * Signed count of curve endpoints in the open arc of the circle u = u_sigma
 * from a to b (torus v-coordinates, both placed in lift k, walked in the
 * direction of increasing v).  Bad-tagged endpoints never count.
 */
SpectralFlow spectral_flow(const BoundaryCurve& curve, const Rat& a, const Rat& b, int lift_k);

// sum_{k=0}^{n-1} of the flow over [theta_i^(k), theta_j^(k)]; index 0 is
// theta_0.
int spectral_flow_sum(const BoundaryCurve& curve, const ThetaPoints& thetas, int i, int j);

struct MatchedPair {
    Crossing on_curve;   // crossing with the perturbed Y-curve
    Crossing on_line;    // the Y1- or Y0-crossing it realizes
};

struct PartitionReport {
    int count_y = 0;
    int count_y1 = 0;
    std::map<Int, int> count_y0;  // k -> count against u = 2(nk+p) + eta, zeros dropped
    bool identity_holds = false;
    std::vector<MatchedPair> matching;
    Rat stability_eps;  // matching is stable for every smaller eps
};

/**
 * The decomposition count: crossings with the perturbed Y-curve of
 * (sigma otimes L_m) split into Y1(m)-crossings and Y0(nk+p)-crossings.
 * Verifies count_y = count_y1 + sum_k count_y0[k] and produces the
 * explicit crossing matching.  Throws instability_error when eps is too
 * coarse for the supplied curve.
 */
PartitionReport partition_check(const BoundaryCurve& curve, int n, int m, int p,
                                const Rat& eps, const Rat& eta);

struct IdentityReport {
    int lhs = 0;            // count against the p/q-curve
    int count_y = 0;        // against v = 0 (torus)
    int count_y0 = 0;       // against u = u_sigma + eta (torus)
    int sf_total = 0;       // sum_i SF[theta_0, theta_i]
    int staircase_total = 0;
    int bad_multiplicity = 0;  // multiplicity of the 2-chain at the bad point
    int bad_sign_total = 0;    // signed number of bad-tagged endpoints
    bool routes_agree = false;
    bool identity_holds = false;
    ThetaPoints thetas;
};

/**
 * The surgery counting identity: the p/q-curve count equals
 * p (v=0 count) + q (u = u_sigma + eta count) + sum_i SF[theta_0, theta_i],
 * with the spectral-flow term recomputed independently through the
 * staircase multiplicities p, p-1, ..., 1, 0.
 *
 * The staircase normalization fixes the comparison 2-chain C up to nothing:
 * its multiplicity at the bad point is then determined and need not vanish.
 * Endpoints mapped to the bad point therefore enter through the exact
 * correction bad_multiplicity * bad_sign_total; for curves without bad
 * endpoints the term is zero and the identity is the literal one.
 */
IdentityReport surgery_count_identity(const BoundaryCurve& curve, const Int& p, const Int& q,
                                      int n, const Rat& u_sigma, const Rat& eta);

} // namespace surgtri
