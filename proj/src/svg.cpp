#include "surgtri/svg.hpp"

#include <algorithm>
#include <sstream>

#include "surgtri/counting.hpp"

namespace surgtri {

namespace {

constexpr int kScale = 40;

// exact fixed-point formatting: round(x * 1000) / 1000 with three decimals
std::string fmt_scaled(const Rat& x) {
    const Rat milli = x * Rat(1000);
    Int rounded = (milli + Rat(1, 2)).floor();
    std::string sign;
    if (rounded < 0) {
        sign = "-";
        rounded = -rounded;
    }
    const Int whole = rounded / 1000;
    const Int frac = rounded % 1000;
    std::string f = frac.str();
    while (f.size() < 3) f = "0" + f;
    return sign + whole.str() + "." + f;
}

struct View {
    Rat u0, u1, v0, v1; // holonomy window

    std::string x(const Rat& u) const { return fmt_scaled((u - u0) * Rat(kScale)); }
    std::string y(const Rat& v) const { return fmt_scaled((v1 - v) * Rat(kScale)); }
    std::string width() const { return fmt_scaled((u1 - u0) * Rat(kScale)); }
    std::string height() const { return fmt_scaled((v1 - v0) * Rat(kScale)); }
};

void polyline(std::ostringstream& out, const View& view, const std::vector<TorusPoint>& pts,
              const std::string& style) {
    out << "<polyline fill=\"none\" " << style << " points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out << " ";
        out << view.x(pts[i].u) << "," << view.y(pts[i].v);
    }
    out << "\"/>\n";
}

void line(std::ostringstream& out, const View& view, const Rat& ua, const Rat& va, const Rat& ub,
          const Rat& vb, const std::string& style) {
    out << "<line " << style << " x1=\"" << view.x(ua) << "\" y1=\"" << view.y(va) << "\" x2=\""
        << view.x(ub) << "\" y2=\"" << view.y(vb) << "\"/>\n";
}

void dot(std::ostringstream& out, const View& view, const TorusPoint& p,
         const std::string& fill) {
    out << "<circle cx=\"" << view.x(p.u) << "\" cy=\"" << view.y(p.v)
        << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
}

} // namespace

std::string render_svg(const CurveFile& file) {
    const TriangleConfig& cfg = file.config;
    const int n = cfg.n;

    View view{Rat(-1), Rat(2 * n + 1), Rat(-1), Rat(2 * n + 1)};
    for (const auto& comp : cfg.curve.components)
        for (const auto& v : comp.vertices) {
            view.u0 = std::min(view.u0, v.u - Rat(1, 2));
            view.u1 = std::max(view.u1, v.u + Rat(1, 2));
            view.v0 = std::min(view.v0, v.v - Rat(1, 2));
            view.v1 = std::max(view.v1, v.v + Rat(1, 2));
        }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << view.width()
        << "\" height=\"" << view.height() << "\" viewBox=\"0 0 " << view.width() << " "
        << view.height() << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << view.width() << "\" height=\"" << view.height()
        << "\" fill=\"#ffffff\"/>\n";

    // integer grid
    for (Int g = view.u0.floor(); g <= view.u1.floor() + 1; ++g) {
        if (Rat(g) < view.u0 || Rat(g) > view.u1) continue;
        const bool major = (g % 2) == 0;
        line(out, view, Rat(g), view.v0, Rat(g), view.v1,
             major ? "stroke=\"#cccccc\" stroke-width=\"1\""
                   : "stroke=\"#eeeeee\" stroke-width=\"1\"");
    }
    for (Int g = view.v0.floor(); g <= view.v1.floor() + 1; ++g) {
        if (Rat(g) < view.v0 || Rat(g) > view.v1) continue;
        const bool major = (g % 2) == 0;
        line(out, view, view.u0, Rat(g), view.u1, Rat(g),
             major ? "stroke=\"#cccccc\" stroke-width=\"1\""
                   : "stroke=\"#eeeeee\" stroke-width=\"1\"");
    }

    // Y-lines v = 2k + eta (dashed), Y1-lines v = u + 2k + 1, Y0-lines
    // u = 2(nk + p) + eta
    for (Int k = ((view.v0 - cfg.eta) / Rat(2)).floor(); Rat(2 * k) + cfg.eta <= view.v1; ++k) {
        const Rat v = Rat(2 * k) + cfg.eta;
        if (v < view.v0) continue;
        line(out, view, view.u0, v, view.u1, v,
             "stroke=\"#6699dd\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    }
    for (Int k = ((view.v0 - view.u1 - Rat(1)) / Rat(2)).floor();
         view.u0 + Rat(2 * k + 1) <= view.v1; ++k) {
        // clip v = u + 2k + 1 to the window
        const Rat c(2 * k + 1);
        Rat ua = std::max(view.u0, view.v0 - c);
        Rat ub = std::min(view.u1, view.v1 - c);
        if (ua > ub) continue;
        line(out, view, ua, ua + c, ub, ub + c, "stroke=\"#2a9d3f\" stroke-width=\"1\"");
    }
    {
        const Rat period(2 * n);
        for (Int k = ((view.u0 - cfg.eta - Rat(2 * cfg.p)) / period).floor();
             Rat(2 * cfg.p) + Rat(k) * period + cfg.eta <= view.u1; ++k) {
            const Rat u = Rat(2 * cfg.p) + Rat(k) * period + cfg.eta;
            if (u < view.u0) continue;
            line(out, view, u, view.v0, u, view.v1, "stroke=\"#cc3344\" stroke-width=\"1\"");
        }
    }

    // slope curve of a surgery configuration
    if (file.surgery) {
        const auto fam = slope_family(slope_curve(file.surgery->first, file.surgery->second),
                                      cfg.eta);
        const Rat lo = fam.nu * view.u0 + fam.nv * view.v0;
        const Rat hi = fam.nu * view.u1 + fam.nv * view.v1;
        for (Int j = ((std::min(lo, hi) - fam.c0) / fam.step).floor() - 1;
             j <= ((std::max(lo, hi) - fam.c0) / fam.step).floor() + 1; ++j) {
            const Rat c = fam.c0 + Rat(j) * fam.step;
            // the slope family has normal (-q, p) with p >= 1
            const Rat v_at_u0 = (c - fam.nu * view.u0) / fam.nv;
            const Rat v_at_u1 = (c - fam.nu * view.u1) / fam.nv;
            line(out, view, view.u0, v_at_u0, view.u1, v_at_u1,
                 "stroke=\"#1b8a8f\" stroke-width=\"1\" stroke-dasharray=\"2,3\"");
        }
    }

    // perturbed Y-curve, with the v-translates that meet the window
    {
        const auto prof = build_refined_profile(n, cfg.p, cfg.eps);
        const PerturbedCurve pert{prof, cfg.eta, Int(cfg.m)};
        const Rat two_n(2 * n);
        const Rat v_lo = pert.value_at(view.u0);
        const Rat v_hi = pert.value_at(view.u1);
        for (Int s = ((view.v0 - std::max(v_lo, v_hi)) / two_n).floor() - 1;
             std::min(v_lo, v_hi) + Rat(s) * two_n <= view.v1 + Rat(2 * n); ++s) {
            std::vector<TorusPoint> pts;
            pts.push_back(plane_point(view.u0, v_lo + Rat(s) * two_n));
            const Rat t0 = prof.breakpoints.front().first;
            for (Int k = ((view.u0 - cfg.eta - t0) / prof.period_len).floor() - 1;
                 k <= ((view.u1 - cfg.eta - t0) / prof.period_len).floor() + 1; ++k)
                for (const auto& [t, v] : prof.breakpoints) {
                    const Rat u = t + Rat(k) * prof.period_len + cfg.eta;
                    if (view.u0 < u && u < view.u1)
                        pts.push_back(plane_point(u, pert.value_at(u) + Rat(s) * two_n));
                }
            std::sort(pts.begin(), pts.end(), [](const TorusPoint& a, const TorusPoint& b) {
                return a.u < b.u;
            });
            pts.push_back(plane_point(view.u1, v_hi + Rat(s) * two_n));
            polyline(out, view, pts, "stroke=\"#e8812a\" stroke-width=\"1.5\"");
        }
    }

    // triangles of the mixed pairs, shaded by sign
    if (!cfg.curve.components.empty()) {
        try {
            auto gens = enumerate_generators(cfg);
            assign_degrees(gens, DegreeMode::AllZero);
            for (size_t i = 0; i < gens.y1.size(); ++i)
                for (size_t j = 0; j < gens.y0.size(); ++j) {
                    const auto xi =
                        enumerate_triangles(cfg, gens, CobordismTag::W1, i, j, true);
                    const Triangle* best = nullptr;
                    for (const auto& t : xi.triangles)
                        if (!best || t.area < best->area) best = &t;
                    if (!best) continue;
                    std::vector<TorusPoint> poly = best->side_a;
                    poly.insert(poly.end(), best->side_b.begin() + 1, best->side_b.end());
                    poly.insert(poly.end(), best->curve_side.begin() + 1,
                                best->curve_side.end());
                    out << "<polygon fill=\"" << (best->sign > 0 ? "#4477cc" : "#cc4444")
                        << "\" fill-opacity=\"0.25\" stroke=\"none\" points=\"";
                    for (size_t v = 0; v + 1 < poly.size(); ++v) {
                        if (v) out << " ";
                        out << view.x(poly[v].u) << "," << view.y(poly[v].v);
                    }
                    out << "\"/>\n";
                }
        } catch (const precondition_error&) {
            // non-generic for triangle enumeration: render the rest
        }
    }

    // boundary curve
    for (const auto& comp : cfg.curve.components) {
        std::vector<TorusPoint> pts = comp.vertices;
        if (comp.closed && !pts.empty()) pts.push_back(pts.front());
        polyline(out, view, pts, "stroke=\"#222222\" stroke-width=\"2\"");
        if (!comp.closed) {
            dot(out, view, comp.vertices.front(),
                comp.start_tag == EndpointTag::Bad ? "#aa1111" : "#222222");
            dot(out, view, comp.vertices.back(),
                comp.end_tag == EndpointTag::Bad ? "#aa1111" : "#222222");
        }
    }

    // theta points of a surgery configuration
    if (file.surgery) {
        try {
            const auto thetas = theta_points(file.surgery->first, file.surgery->second,
                                             cfg.curve.u_sigma, n, cfg.eta);
            dot(out, view, plane_point(thetas.theta0.u, thetas.theta0.v), "#7733aa");
            for (const auto& fam : thetas.lifts)
                for (const auto& lift : fam) dot(out, view, plane_point(lift.u, lift.v),
                                                 "#7733aa");
        } catch (const precondition_error&) {
        }
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace surgtri
