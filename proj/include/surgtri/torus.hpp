#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surgtri/rat.hpp"

namespace surgtri {

// Which quotient of H^1(T^2, R) a point is expressed in.  PLANE is the full
// cover, CYL_V(n) quotients v by 2n (fundamental domain {u in R} x [0, 2n)),
// TORUS quotients both coordinates by 2.
enum class Space { Plane, CylV, Torus };

struct TorusPoint {
    Rat u;
    Rat v;
    Space space = Space::Plane;
    int n = 1; // torsion order, meaningful for CylV only

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
        return a.u == b.u && a.v == b.v && a.space == b.space;
    }
};

TorusPoint plane_point(Rat u, Rat v);
TorusPoint cyl_point(Rat u, Rat v, int n);  // reduces v mod 2n
TorusPoint torus_point(Rat u, Rat v);       // reduces both mod 2

// Projections down the covering maps.
TorusPoint to_torus(const TorusPoint& p);
TorusPoint to_cyl(const TorusPoint& p, int n);

// The flat connection where the twisted Dirac operator on T^2 has kernel.
// Fixed at (u, v) = (1, 1); shifts move configurations, never this point.
bool is_bad_point(const TorusPoint& p);

// The three reducible-line families, in the eta-shifted normal form
//   Y : v = 2k + eta      Y1 : v = u + 2k + 1      Y0 : u = 2k + eta.
enum class LineKind { Y, Y1, Y0 };

struct ReducibleLine {
    LineKind kind;
    Int k;
    Rat eta;

    // Defining equation evaluated at plane coordinates; zero iff on the line.
    Rat defect(const TorusPoint& p) const;
    bool contains(const TorusPoint& p) const { return defect(p).is_zero(); }

    // Tangent in the fixed orientation: Y0 and vertical circles by
    // increasing v, Y and Y1 by increasing u.
    std::pair<Rat, Rat> direction() const;
};

ReducibleLine reducible_line(LineKind kind, const Int& k, const Rat& eta);

/**
 * The reducible circle of the p/q-filled solid torus, drawn on the character
 * torus: the closed curve parallel to { p v = q u } through (0,1) when q is
 * odd and through (0,0) when q is even.  A point lies on the curve iff
 * p*v - q*u - p*(base_v + vshift) is an even integer; vshift is the
 * eta-perturbation of the asymptotic values, applied in the +v direction.
 */
struct SlopeCurve {
    Int p;
    Int q;
    TorusPoint base_point; // torus coordinates

    Rat defect(const TorusPoint& pt, const Rat& vshift = Rat(0)) const;
    bool contains(const TorusPoint& pt, const Rat& vshift = Rat(0)) const {
        return mod_reduce(defect(pt, vshift), Rat(2)).is_zero();
    }
};

SlopeCurve slope_curve(const Int& p, const Int& q);

/**
 * The ordered intersection data of the vertical circle u = u_sigma with the
 * eta-shifted p/q-curve: theta_0 = (u_sigma, 0), the p torus intersection
 * points theta_1..theta_p ordered by increasing v (the orientation of the
 * circle), and their n lifts each in CYL_V(n).
 */
struct ThetaPoints {
    TorusPoint theta0;
    std::vector<TorusPoint> thetas;              // p points on the torus
    std::vector<std::vector<TorusPoint>> lifts;  // lifts[i][k], k = 0..n-1
    Int p;
    Int q;
    Rat u_sigma;
    Rat eta;
    int n = 1;
};

ThetaPoints theta_points(const Int& p, const Int& q, const Rat& u_sigma, int n, const Rat& eta);

// Transversality bookkeeping of Prop.-level hypotheses: reducible circles
// away from the bad point, the slope curve off the bad point and off
// (u_sigma, 0), supplied image points away from the theta set.
struct GenericityConfig {
    std::vector<Rat> circle_u;                   // vertical reducible circles u = c
    std::optional<SlopeCurve> curve;
    Rat curve_vshift = Rat(0);
    std::vector<TorusPoint> image_points;        // boundary-curve image samples
    std::optional<ThetaPoints> thetas;
};

struct GenericityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

GenericityReport check_generic(const GenericityConfig& config);

} // namespace surgtri
