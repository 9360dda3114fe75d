#pragma once

#include <vector>

#include "surgtri/torus.hpp"

namespace surgtri {

enum class EndpointTag { Reducible, Bad };

/**
 * One oriented PL component of a synthetic boundary-value curve.  Vertices
 * are plane coordinates; the projection to CYL_V(n) is implicit and the
 * counting layer enumerates whatever 2nZ v-translates of a target a
 * component can meet.  A closed component connects its last vertex back to
 * the first.
 */
struct CurveComponent {
    std::vector<TorusPoint> vertices;
    bool closed = false;
    EndpointTag start_tag = EndpointTag::Reducible;
    EndpointTag end_tag = EndpointTag::Reducible;
};

/**
 * Synthetic model of the asymptotic-value image of the irreducible moduli
 * space: an oriented PL 1-manifold in CYL_V(n) whose arc endpoints either
 * sit on the reducible circle u = u_sigma or are tagged Bad (they map to
 * the bad point and are excluded from every count).
 */
struct BoundaryCurve {
    int n = 1;
    Rat u_sigma;
    std::vector<CurveComponent> components;
};

struct CurveEndpoint {
    TorusPoint position;   // plane coordinates
    int sign;              // -1 where an arc starts, +1 where it ends
    EndpointTag tag;
    size_t component;
};

// Validates the endpoint constraints (exact u = u_sigma for reducible tags,
// an exact lift of (1,1) for bad tags), vertex multiplicity, and component
// shapes.  Throws precondition_error on violations.
BoundaryCurve make_boundary_curve(int n, const Rat& u_sigma,
                                  std::vector<CurveComponent> components);

std::vector<CurveEndpoint> curve_endpoints(const BoundaryCurve& curve);

} // namespace surgtri
