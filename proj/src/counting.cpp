#include "surgtri/counting.hpp"

#include <algorithm>

namespace surgtri {

namespace {

struct Seg {
    size_t comp;
    size_t idx;
    TorusPoint P;
    TorusPoint Q;
};

std::vector<Seg> segments_of(const BoundaryCurve& curve) {
    std::vector<Seg> out;
    for (size_t c = 0; c < curve.components.size(); ++c) {
        const auto& vs = curve.components[c].vertices;
        for (size_t i = 0; i + 1 < vs.size(); ++i) out.push_back({c, i, vs[i], vs[i + 1]});
        if (curve.components[c].closed)
            out.push_back({c, vs.size() - 1, vs.back(), vs.front()});
    }
    return out;
}

Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) { return a * d - b * c; }

[[noreturn]] void vertex_on_target(const Seg& seg, const std::string& target, bool at_start) {
    throw genericity_error("curve vertex (component " + std::to_string(seg.comp) +
                           ", segment " + std::to_string(seg.idx) + ", " +
                           (at_start ? "start" : "end") + ") lies on " + target);
}

} // namespace

LineFamily line_family(const ReducibleLine& line, int n, bool sum_family) {
    if (n < 1) throw precondition_error("line_family: n must be positive");
    const Rat step = sum_family ? Rat(2) : Rat(2 * n);
    switch (line.kind) {
        case LineKind::Y:
            return {Rat(0), Rat(1), Rat(1), Rat(0),
                    sum_family ? line.eta : Rat(2 * line.k) + line.eta, step, "Y-line"};
        case LineKind::Y1:
            return {Rat(-1), Rat(1), Rat(1), Rat(1),
                    sum_family ? Rat(1) : Rat(2 * line.k + 1), step, "Y1-line"};
        case LineKind::Y0:
            return {Rat(1), Rat(0), Rat(0), Rat(1),
                    sum_family ? line.eta : Rat(2 * line.k) + line.eta,
                    sum_family ? Rat(2) : Rat(0), "Y0-line"};
    }
    throw integrity_error("line_family: bad kind");
}

LineFamily slope_family(const SlopeCurve& curve, const Rat& vshift) {
    // p v - q u = p (base_v + vshift) - q base_u  (mod 2)
    const Rat c0 = Rat(curve.p) * (curve.base_point.v + vshift) - Rat(curve.q) * curve.base_point.u;
    return {Rat(-curve.q), Rat(curve.p), Rat(curve.p), Rat(curve.q), c0, Rat(2), "p/q-curve"};
}

LineFamily vertical_family(const Rat& c) {
    return {Rat(1), Rat(0), Rat(0), Rat(1), c, Rat(2), "vertical circle"};
}

std::vector<Crossing> line_crossings(const BoundaryCurve& curve, const LineFamily& fam) {
    std::vector<Crossing> out;
    for (const Seg& seg : segments_of(curve)) {
        const Rat fP = fam.nu * seg.P.u + fam.nv * seg.P.v - fam.c0;
        const Rat fQ = fam.nu * seg.Q.u + fam.nv * seg.Q.v - fam.c0;

        std::vector<Rat> values;
        if (fam.step.is_zero()) {
            values.push_back(Rat(0));
        } else {
            const Rat lo = std::min(fP, fQ), hi = std::max(fP, fQ);
            for (Int j = (lo / fam.step).floor(); j <= (hi / fam.step).floor() + 1; ++j)
                values.push_back(Rat(j) * fam.step);
        }

        for (const Rat& c : values) {
            const Rat a = fP - c, b = fQ - c;
            if (a.is_zero()) vertex_on_target(seg, fam.name, true);
            if (b.is_zero()) vertex_on_target(seg, fam.name, false);
            if (a.sign() * b.sign() < 0) {
                const Rat t = a / (a - b);
                Crossing x;
                x.component = seg.comp;
                x.segment = seg.idx;
                x.t = t;
                x.point = plane_point(seg.P.u + t * (seg.Q.u - seg.P.u),
                                      seg.P.v + t * (seg.Q.v - seg.P.v));
                x.sign = det2(seg.Q.u - seg.P.u, seg.Q.v - seg.P.v, fam.du, fam.dv).sign();
                if (x.sign == 0)
                    throw genericity_error("segment parallel to " + fam.name +
                                           " with a sign change");
                x.piece = Crossing::Piece::Line;
                x.level = fam.c0 + c;
                out.push_back(std::move(x));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Crossing> perturbed_crossings(const BoundaryCurve& curve,
                                          const PerturbedCurve& target) {
    const auto& prof = target.profile;
    const auto& bp = prof.breakpoints;
    const Rat two_n(2 * prof.n);
    const Rat t0 = bp.front().first;
    const Rat L = prof.period_len;
    const Rat R = prof.period_rise;
    const Rat vshift = target.eta + Rat(2 * target.m);

    std::vector<Crossing> out;
    for (const Seg& seg : segments_of(curve)) {
        const Rat umin = std::min(seg.P.u, seg.Q.u), umax = std::max(seg.P.u, seg.Q.u);
        const Rat vmin = std::min(seg.P.v, seg.Q.v), vmax = std::max(seg.P.v, seg.Q.v);
        const Rat du = seg.Q.u - seg.P.u, dv = seg.Q.v - seg.P.v;

        const Int klo = ((umin - target.eta - t0) / L).floor() - 1;
        const Int khi = ((umax - target.eta - t0) / L).floor() + 1;
        for (Int k = klo; k <= khi; ++k) {
            for (size_t i = 0; i + 1 < bp.size(); ++i) {
                // piece endpoints in plane coordinates, before v-translation
                const Rat au = bp[i].first + Rat(k) * L + target.eta;
                const Rat bu = bp[i + 1].first + Rat(k) * L + target.eta;
                const Rat av0 = bp[i].second + Rat(k) * R + vshift;
                const Rat bv0 = bp[i + 1].second + Rat(k) * R + vshift;
                if (bu < umin || au > umax) continue;

                const Rat pvmin = std::min(av0, bv0), pvmax = std::max(av0, bv0);
                const Int slo = ((vmin - pvmax) / two_n).floor() - 1;
                const Int shi = ((vmax - pvmin) / two_n).floor() + 1;
                for (Int s = slo; s <= shi; ++s) {
                    const Rat av = av0 + Rat(s) * two_n;
                    const Rat bv = bv0 + Rat(s) * two_n;
                    const Rat d2u = bu - au, d2v = bv - av;
                    const Rat D = det2(du, dv, d2u, d2v);
                    const Rat eu = au - seg.P.u, ev = av - seg.P.v;
                    if (D.is_zero()) {
                        if (det2(eu, ev, du, dv).is_zero() && !(bu < umin || au > umax) &&
                            !(std::max(av, bv) < vmin || std::min(av, bv) > vmax))
                            throw genericity_error("curve segment overlaps the perturbed curve");
                        continue;
                    }
                    const Rat t = det2(eu, ev, d2u, d2v) / D;
                    const Rat w = det2(eu, ev, du, dv) / D;
                    if (t < Rat(0) || t > Rat(1) || w < Rat(0) || w > Rat(1)) continue;
                    if (t.is_zero() || t == Rat(1))
                        vertex_on_target({seg.comp, seg.idx, seg.P, seg.Q},
                                         "the perturbed curve", t.is_zero());
                    if (w.is_zero() || w == Rat(1))
                        throw genericity_error(
                            "curve crosses the perturbed curve at a breakpoint");

                    Crossing x;
                    x.component = seg.comp;
                    x.segment = seg.idx;
                    x.t = t;
                    x.point = plane_point(seg.P.u + t * du, seg.P.v + t * dv);
                    x.sign = D.sign();
                    const bool diag = d2v.abs() <= d2u.abs();
                    if (diag) {
                        x.piece = Crossing::Piece::Diag;
                        x.level = x.point.v - x.point.u + prof.diag_offset;
                    } else {
                        x.piece = Crossing::Piece::Wall;
                        x.level = (au + bu) / Rat(2);
                    }
                    x.copy = s;
                    out.push_back(std::move(x));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int signed_count(const BoundaryCurve& curve, const LineFamily& family) {
    int total = 0;
    for (const auto& x : line_crossings(curve, family)) total += x.sign;
    return total;
}

int signed_count(const BoundaryCurve& curve, const PerturbedCurve& target) {
    int total = 0;
    for (const auto& x : perturbed_crossings(curve, target)) total += x.sign;
    return total;
}

SpectralFlow spectral_flow(const BoundaryCurve& curve, const Rat& a, const Rat& b, int lift_k) {
    const Rat two_n(2 * curve.n);
    const Rat A = mod_reduce(a + Rat(2 * lift_k), two_n);
    const Rat B = mod_reduce(b + Rat(2 * lift_k), two_n);
    SpectralFlow flow;
    flow.from = A;
    flow.to = B;
    flow.lift_k = lift_k;
    if (A == B) return flow;

    for (const auto& ep : curve_endpoints(curve)) {
        if (ep.tag == EndpointTag::Bad) continue;
        const Rat x = mod_reduce(ep.position.v, two_n);
        if (x == A || x == B)
            throw genericity_error("interval endpoint collides with a curve endpoint");
        const bool inside = (A < B) ? (A < x && x < B) : (x > A || x < B);
        if (inside) flow.value += ep.sign;
    }
    return flow;
}

int spectral_flow_sum(const BoundaryCurve& curve, const ThetaPoints& thetas, int i, int j) {
    if (curve.n != thetas.n)
        throw precondition_error("spectral_flow_sum: torsion orders disagree");
    const auto v_of = [&](int idx) -> Rat {
        if (idx == 0) return Rat(0);
        return thetas.thetas.at(size_t(idx - 1)).v;
    };
    int total = 0;
    for (int k = 0; k < curve.n; ++k)
        total += spectral_flow(curve, v_of(i), v_of(j), k).value;
    return total;
}

PartitionReport partition_check(const BoundaryCurve& curve, int n, int m, int p,
                                const Rat& eps, const Rat& eta) {
    if (curve.n != n) throw precondition_error("partition_check: torsion orders disagree");
    if (m < 0 || m >= n) throw precondition_error("partition_check: need 0 <= m < n");

    const auto profile = build_refined_profile(n, p, eps);
    const PerturbedCurve pert{profile, eta, Int(m)};

    auto on_curve = perturbed_crossings(curve, pert);
    auto on_y1 = line_crossings(curve, line_family(reducible_line(LineKind::Y1, m, Rat(0)), n,
                                                   /*sum_family=*/false));

    // Y0 wall lines u = 2(nk + p) + eta met by the curve
    Rat umin(0), umax(0);
    bool first_vertex = true;
    for (const auto& comp : curve.components)
        for (const auto& v : comp.vertices) {
            if (first_vertex) {
                umin = umax = v.u;
                first_vertex = false;
            } else {
                umin = std::min(umin, v.u);
                umax = std::max(umax, v.u);
            }
        }
    std::vector<Crossing> on_y0;
    std::map<Int, int> y0_counts;
    const Rat two_n(2 * n);
    for (Int k = ((umin - eta - Rat(2 * p)) / two_n).floor() - 1;
         k <= ((umax - eta - Rat(2 * p)) / two_n).floor() + 1; ++k) {
        const Rat c = Rat(2) * (Rat(k) * Rat(n) + Rat(p)) + eta;
        LineFamily wall_line{Rat(1), Rat(0), Rat(0), Rat(1), c, Rat(0),
                             "Y0-line u = " + c.str()};
        auto xs = line_crossings(curve, wall_line);
        int count = 0;
        for (const auto& x : xs) count += x.sign;
        if (!xs.empty()) {
            y0_counts[Int(n) * k + Int(p)] += count;
            on_y0.insert(on_y0.end(), xs.begin(), xs.end());
        }
    }
    for (auto it = y0_counts.begin(); it != y0_counts.end();)
        it = (it->second == 0) ? y0_counts.erase(it) : std::next(it);

    PartitionReport report;
    for (const auto& x : on_curve) report.count_y += x.sign;
    for (const auto& x : on_y1) report.count_y1 += x.sign;
    report.count_y0 = y0_counts;

    // crossing matching: walk each component's events in order and pair a
    // perturbed-curve crossing with the line crossing it realizes
    struct Event {
        Crossing x;
        bool pert; // true: on the perturbed curve; false: on a line
    };
    std::vector<Event> events;
    for (const auto& x : on_curve) events.push_back({x, true});
    for (const auto& x : on_y1) events.push_back({x, false});
    for (const auto& x : on_y0) events.push_back({x, false});
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.x < b.x; });

    const auto pairable = [](const Event& a, const Event& b) {
        if (a.pert == b.pert) return false;
        const Event& q = a.pert ? a : b;
        const Event& l = a.pert ? b : a;
        if (q.x.sign != l.x.sign) return false;
        // wall pairs with the vertical line u = c it straddles, a diagonal
        // with the exact Y1-lift it hugs
        return l.x.level == q.x.level;
    };

    for (size_t c = 0; c < curve.components.size(); ++c) {
        std::vector<Event> local;
        for (const auto& e : events)
            if (e.x.component == c) local.push_back(e);
        if (local.size() % 2 != 0)
            throw instability_error("partition_check: unmatched crossing on component " +
                                    std::to_string(c) + "; retry with smaller eps");
        const auto try_phase = [&](size_t phase, std::vector<MatchedPair>& pairs) {
            const size_t len = local.size();
            for (size_t i = 0; i < len; i += 2) {
                const Event& a = local[(i + phase) % len];
                const Event& b = local[(i + phase + 1) % len];
                if (!pairable(a, b)) return false;
                pairs.push_back({a.pert ? a.x : b.x, a.pert ? b.x : a.x});
            }
            return true;
        };
        std::vector<MatchedPair> pairs;
        bool ok = try_phase(0, pairs);
        if (!ok && curve.components[c].closed) {
            pairs.clear();
            ok = try_phase(1, pairs);
        }
        if (!ok)
            throw instability_error("partition_check: crossings on component " +
                                    std::to_string(c) +
                                    " cannot be matched; retry with smaller eps");
        report.matching.insert(report.matching.end(), pairs.begin(), pairs.end());
    }

    int y0_total = 0;
    for (const auto& [k, v] : report.count_y0) y0_total += v;
    report.identity_holds = (report.count_y == report.count_y1 + y0_total);

    // stability hint: strips of half-width eps' stay clear of every vertex
    // and line crossings stay separated, for all eps' below this value
    Rat stab = eps;
    const auto lattice_gap = [](const Rat& x, const Rat& c0, const Rat& step) {
        const Rat r = mod_reduce(x - c0, step);
        return std::min(r, step - r);
    };
    for (const auto& comp : curve.components)
        for (const auto& v : comp.vertices) {
            stab = std::min(stab, lattice_gap(v.v - v.u, Rat(2 * m + 1), two_n));
            stab = std::min(stab, lattice_gap(v.u, Rat(2 * p) + eta, two_n));
        }
    std::vector<Crossing> line_xs = on_y1;
    line_xs.insert(line_xs.end(), on_y0.begin(), on_y0.end());
    for (size_t i = 0; i < line_xs.size(); ++i)
        for (size_t j = i + 1; j < line_xs.size(); ++j) {
            if (line_xs[i].component != line_xs[j].component) continue;
            const Rat d = std::max((line_xs[i].point.u - line_xs[j].point.u).abs(),
                                   (line_xs[i].point.v - line_xs[j].point.v).abs());
            if (!d.is_zero()) stab = std::min(stab, d);
        }
    report.stability_eps = stab / Rat(4);
    return report;
}

IdentityReport surgery_count_identity(const BoundaryCurve& curve, const Int& p, const Int& q,
                                      int n, const Rat& u_sigma, const Rat& eta) {
    if (curve.n != n)
        throw precondition_error("surgery_count_identity: torsion orders disagree");
    if (curve.u_sigma != u_sigma)
        throw precondition_error("surgery_count_identity: u_sigma disagrees with the curve");

    IdentityReport report;
    report.thetas = theta_points(p, q, u_sigma, n, eta);

    GenericityConfig cfg;
    cfg.circle_u = {u_sigma, u_sigma + eta};
    cfg.curve = slope_curve(p, q);
    cfg.curve_vshift = eta;
    cfg.thetas = report.thetas;
    const auto generic = check_generic(cfg);
    if (!generic.ok) {
        std::string msg = "surgery_count_identity:";
        for (const auto& v : generic.violations) msg += " " + v;
        throw genericity_error(msg);
    }

    // theta points (any torus lift) must miss the curve entirely
    for (const Seg& seg : segments_of(curve)) {
        const Rat du = seg.Q.u - seg.P.u, dv = seg.Q.v - seg.P.v;
        const auto hits = [&](const TorusPoint& theta) {
            if (du.is_zero()) {
                const Rat diff = seg.P.u - theta.u;
                if (!diff.is_integer() || (diff.num() % 2) != 0) return false;
                const Rat lo = std::min(seg.P.v, seg.Q.v), hi = std::max(seg.P.v, seg.Q.v);
                for (Int b = ((lo - theta.v) / Rat(2)).floor();
                     b <= ((hi - theta.v) / Rat(2)).floor() + 1; ++b) {
                    const Rat vv = theta.v + Rat(2 * b);
                    if (lo <= vv && vv <= hi) return true;
                }
                return false;
            }
            for (Int a = ((std::min(seg.P.u, seg.Q.u) - theta.u) / Rat(2)).floor();
                 a <= ((std::max(seg.P.u, seg.Q.u) - theta.u) / Rat(2)).floor() + 1; ++a) {
                const Rat uu = theta.u + Rat(2 * a);
                const Rat t = (uu - seg.P.u) / du;
                if (t < Rat(0) || t > Rat(1)) continue;
                const Rat vv = seg.P.v + t * dv;
                if (mod_reduce(vv - theta.v, Rat(2)).is_zero()) return true;
            }
            return false;
        };
        if (hits(report.thetas.theta0))
            throw genericity_error("curve passes through theta_0");
        for (const auto& th : report.thetas.thetas)
            if (hits(th)) throw genericity_error("curve passes through a theta point");
    }

    report.lhs = signed_count(curve, slope_family(slope_curve(p, q), eta));
    report.count_y =
        signed_count(curve, line_family(reducible_line(LineKind::Y, 0, Rat(0)), n, true));
    report.count_y0 = signed_count(curve, vertical_family(u_sigma + eta));

    const int pp = static_cast<int>(p.convert_to<long long>());
    for (int i = 1; i <= pp; ++i)
        report.sf_total += spectral_flow_sum(curve, report.thetas, 0, i);

    // independent staircase route: multiplicity p - j on (theta_j, theta_j+1)
    for (const auto& ep : curve_endpoints(curve)) {
        if (ep.tag == EndpointTag::Bad) continue;
        const Rat x = mod_reduce(ep.position.v, Rat(2));
        if (x.is_zero())
            throw genericity_error("curve endpoint sits on theta_0");
        int j = 0;
        for (const auto& th : report.thetas.thetas) {
            if (x == th.v) throw genericity_error("curve endpoint sits on a theta point");
            if (th.v < x) ++j;
        }
        report.staircase_total += ep.sign * (pp - j);
    }

    report.routes_agree = (report.sf_total == report.staircase_total);

    // Multiplicity of the staircase-normalized 2-chain at the bad point:
    // walk a synthetic path from the zero-multiplicity interval on the
    // circle to (1,1) and accumulate the boundary jumps through the same
    // counting engine.
    for (const auto& ep : curve_endpoints(curve))
        if (ep.tag == EndpointTag::Bad) report.bad_sign_total += ep.sign;
    if (report.bad_sign_total != 0 ||
        !std::all_of(curve.components.begin(), curve.components.end(),
                     [](const CurveComponent& c) {
                         return c.closed || (c.start_tag == EndpointTag::Reducible &&
                                             c.end_tag == EndpointTag::Reducible);
                     })) {
        const Rat top = report.thetas.thetas.empty() ? Rat(0)
                                                     : report.thetas.thetas.back().v;
        bool done = false;
        for (int d = 3; d <= 101 && !done; d += 2) {
            const Rat v_star = Rat(2) - (Rat(2) - top) / Rat(d);
            if (v_star <= Rat(1)) continue;
            CurveComponent probe;
            probe.vertices = {plane_point(u_sigma, v_star), plane_point(Rat(1), v_star),
                              plane_point(Rat(1), Rat(1))};
            probe.end_tag = EndpointTag::Bad;
            try {
                const auto path = make_boundary_curve(n, u_sigma, {probe});
                const int g =
                    signed_count(path, slope_family(slope_curve(p, q), eta)) -
                    pp * signed_count(path, line_family(reducible_line(LineKind::Y, 0, Rat(0)),
                                                        n, true)) -
                    static_cast<int>(q.convert_to<long long>()) *
                        signed_count(path, vertical_family(u_sigma + eta));
                report.bad_multiplicity = g;
                done = true;
            } catch (const genericity_error&) {
                continue; // probe corner hit a line; try another height
            }
        }
        if (!done)
            throw genericity_error(
                "surgery_count_identity: no generic probe path to the bad point");
    }

    const long long qll = q.convert_to<long long>();
    const long long rhs = static_cast<long long>(pp) * report.count_y +
                          qll * report.count_y0 + report.sf_total +
                          static_cast<long long>(report.bad_multiplicity) *
                              report.bad_sign_total;
    report.identity_holds = (report.lhs == rhs);
    return report;
}

} // namespace surgtri
