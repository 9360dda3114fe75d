#include "surgtri/torus.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace surgtri {

TorusPoint plane_point(Rat u, Rat v) { return {std::move(u), std::move(v), Space::Plane, 1}; }

TorusPoint cyl_point(Rat u, Rat v, int n) {
    if (n < 1) throw precondition_error("cyl_point: n must be positive");
    return {std::move(u), mod_reduce(v, Rat(2 * n)), Space::CylV, n};
}

TorusPoint torus_point(Rat u, Rat v) {
    return {mod_reduce(u, Rat(2)), mod_reduce(v, Rat(2)), Space::Torus, 1};
}

TorusPoint to_torus(const TorusPoint& p) { return torus_point(p.u, p.v); }

TorusPoint to_cyl(const TorusPoint& p, int n) { return cyl_point(p.u, p.v, n); }

bool is_bad_point(const TorusPoint& p) {
    const TorusPoint t = to_torus(p);
    return t.u == Rat(1) && t.v == Rat(1);
}

Rat ReducibleLine::defect(const TorusPoint& p) const {
    switch (kind) {
        case LineKind::Y: return p.v - Rat(2 * k) - eta;
        case LineKind::Y1: return p.v - p.u - Rat(2 * k + 1);
        case LineKind::Y0: return p.u - Rat(2 * k) - eta;
    }
    throw integrity_error("ReducibleLine: bad kind");
}

std::pair<Rat, Rat> ReducibleLine::direction() const {
    switch (kind) {
        case LineKind::Y: return {Rat(1), Rat(0)};
        case LineKind::Y1: return {Rat(1), Rat(1)};
        case LineKind::Y0: return {Rat(0), Rat(1)};
    }
    throw integrity_error("ReducibleLine: bad kind");
}

ReducibleLine reducible_line(LineKind kind, const Int& k, const Rat& eta) {
    if (eta.is_negative()) throw precondition_error("reducible_line: eta must be >= 0");
    return ReducibleLine{kind, k, eta};
}

Rat SlopeCurve::defect(const TorusPoint& pt, const Rat& vshift) const {
    return Rat(p) * (pt.v - base_point.v - vshift) - Rat(q) * (pt.u - base_point.u);
}

SlopeCurve slope_curve(const Int& p, const Int& q) {
    if (p < 1) throw precondition_error("slope_curve: p must be >= 1");
    if (boost::multiprecision::gcd(boost::multiprecision::abs(p),
                                   boost::multiprecision::abs(q)) != 1)
        throw precondition_error("slope_curve: p and q must be coprime");
    const bool q_odd = (q % 2) != 0;
    return SlopeCurve{p, q, torus_point(Rat(0), Rat(q_odd ? 1 : 0))};
}

ThetaPoints theta_points(const Int& p, const Int& q, const Rat& u_sigma, int n, const Rat& eta) {
    if (n < 1) throw precondition_error("theta_points: n must be positive");
    const SlopeCurve curve = slope_curve(p, q);

    ThetaPoints out;
    out.theta0 = torus_point(u_sigma, Rat(0));
    out.p = p;
    out.q = q;
    out.u_sigma = u_sigma;
    out.eta = eta;
    out.n = n;

    // Intersections of u = u_sigma with the shifted curve: p v = q u_sigma
    // + p (base_v + eta) mod 2, giving p values of v spaced by 2/p.
    const Rat v0 = (Rat(q) * u_sigma + Rat(p) * (curve.base_point.v + eta)) / Rat(p);
    std::vector<Rat> vs;
    for (Int j = 0; j < p; ++j) vs.push_back(mod_reduce(v0 + Rat(2 * j) / Rat(p), Rat(2)));
    std::sort(vs.begin(), vs.end());

    for (const Rat& v : vs) {
        if (v.is_zero())
            throw genericity_error("theta_points: slope curve meets the circle on v = 0");
        const TorusPoint theta = torus_point(u_sigma, v);
        if (is_bad_point(theta))
            throw genericity_error("theta_points: an intersection hits the bad point (1,1)");
        out.thetas.push_back(theta);
        std::vector<TorusPoint> fam;
        for (int k = 0; k < n; ++k) fam.push_back(cyl_point(theta.u, theta.v + Rat(2 * k), n));
        out.lifts.push_back(std::move(fam));
    }
    return out;
}

GenericityReport check_generic(const GenericityConfig& config) {
    GenericityReport report;
    auto violate = [&report](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    for (const Rat& c : config.circle_u) {
        if (mod_reduce(c, Rat(2)) == Rat(1))
            violate("reducible circle u = " + c.str() + " passes through the bad point (1,1)");
    }

    if (config.curve) {
        const SlopeCurve& curve = *config.curve;
        if (curve.contains(torus_point(Rat(1), Rat(1)), config.curve_vshift))
            violate("slope curve passes through the bad point (1,1)");
        for (const Rat& c : config.circle_u) {
            if (curve.contains(torus_point(c, Rat(0)), config.curve_vshift))
                violate("slope curve meets u = " + c.str() + " on the line v = 0");
        }
    }

    if (config.thetas) {
        const ThetaPoints& th = *config.thetas;
        for (const TorusPoint& pt : config.image_points) {
            const TorusPoint t = to_torus(pt);
            if (t == th.theta0) violate("image point sits on theta_0");
            for (size_t i = 0; i < th.thetas.size(); ++i)
                if (t == th.thetas[i])
                    violate("image point sits on theta_" + std::to_string(i + 1));
        }
    }
    return report;
}

} // namespace surgtri
