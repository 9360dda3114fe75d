#include "surgtri/triangles.hpp"

#include <algorithm>

namespace surgtri {

namespace {

// value of the translated perturbed-curve copy at u
Rat copy_value(const TriangleConfig& cfg, const PerturbationProfile& prof, const Int& s,
               const Rat& u) {
    return eval_profile(prof, u - cfg.eta) + cfg.eta + Rat(2 * cfg.m) + Rat(2 * cfg.n) * Rat(s);
}

// PL path along the copy from u_from to u_to (either direction)
std::vector<TorusPoint> copy_path(const TriangleConfig& cfg, const PerturbationProfile& prof,
                                  const Int& s, const Rat& u_from, const Rat& u_to) {
    std::vector<TorusPoint> path;
    path.push_back(plane_point(u_from, copy_value(cfg, prof, s, u_from)));
    const Rat lo = std::min(u_from, u_to), hi = std::max(u_from, u_to);
    std::vector<Rat> knots;
    const Rat t0 = prof.breakpoints.front().first;
    for (Int k = ((lo - cfg.eta - t0) / prof.period_len).floor() - 1;
         k <= ((hi - cfg.eta - t0) / prof.period_len).floor() + 1; ++k)
        for (const auto& [t, v] : prof.breakpoints) {
            const Rat u = t + Rat(k) * prof.period_len + cfg.eta;
            if (lo < u && u < hi) knots.push_back(u);
        }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    if (u_from > u_to) std::reverse(knots.begin(), knots.end());
    for (const Rat& u : knots) path.push_back(plane_point(u, copy_value(cfg, prof, s, u)));
    path.push_back(plane_point(u_to, copy_value(cfg, prof, s, u_to)));
    return path;
}

// unique intersection of the copy with the Y1-lift { v = u + level }
TorusPoint theta_on_y1(const TriangleConfig& cfg, const PerturbationProfile& prof, const Int& s,
                       const Rat& level) {
    // g(u) = copy(u) - u - level gains 2n per period and is constant on
    // diagonal pieces; the zero sits on exactly one wall
    const Rat t0 = prof.breakpoints.front().first;
    const Rat u0 = t0 + cfg.eta;
    const Rat g0 = copy_value(cfg, prof, s, u0) - u0 - level;
    const Rat two_n(2 * cfg.n);
    const Int k0 = (-g0 / two_n).floor() - 1;
    for (Int k = k0; k <= k0 + 3; ++k) {
        const Rat ua = prof.breakpoints[0].first + Rat(k) * prof.period_len + cfg.eta;
        const Rat ub = prof.breakpoints[1].first + Rat(k) * prof.period_len + cfg.eta;
        const Rat ga = copy_value(cfg, prof, s, ua) - ua - level;
        const Rat gb = copy_value(cfg, prof, s, ub) - ub - level;
        if (ga.is_zero() || gb.is_zero())
            throw genericity_error("vartheta sits on a breakpoint of the perturbed curve");
        if (ga.sign() * gb.sign() < 0) {
            const Rat t = ga / (ga - gb);
            const Rat u = ua + t * (ub - ua);
            return plane_point(u, u + level);
        }
    }
    throw integrity_error("theta_on_y1: no wall crossing located");
}

int shoelace_sign(const std::vector<TorusPoint>& poly, Rat* twice_area = nullptr) {
    Rat sum(0);
    for (size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        sum += a.u * b.v - b.u * a.v;
    }
    if (twice_area) *twice_area = sum.abs();
    return sum.sign();
}

std::vector<TorusPoint> forward_walk(const CurveComponent& comp, const Crossing& from,
                                     const Crossing& to) {
    std::vector<TorusPoint> path{from.point};
    const size_t V = comp.vertices.size();
    if (from.segment == to.segment && from.t < to.t) {
        path.push_back(to.point);
        return path;
    }
    size_t i = from.segment;
    do {
        i = (i + 1) % V;
        path.push_back(comp.vertices[i]);
    } while (i != to.segment);
    path.push_back(to.point);
    return path;
}

std::vector<std::vector<TorusPoint>> curve_subpaths(const CurveComponent& comp,
                                                    const Crossing& from, const Crossing& to) {
    std::vector<std::vector<TorusPoint>> out;
    const auto pos_less = [](const Crossing& a, const Crossing& b) {
        return a.segment < b.segment || (a.segment == b.segment && a.t < b.t);
    };
    if (comp.closed) {
        out.push_back(forward_walk(comp, from, to));
        auto back = forward_walk(comp, to, from);
        std::reverse(back.begin(), back.end());
        out.push_back(std::move(back));
    } else if (pos_less(from, to)) {
        out.push_back(forward_walk(comp, from, to));
    } else {
        auto back = forward_walk(comp, to, from);
        std::reverse(back.begin(), back.end());
        out.push_back(std::move(back));
    }
    return out;
}

void append_dropping_joint(std::vector<TorusPoint>& contour,
                           const std::vector<TorusPoint>& side) {
    for (size_t i = 1; i < side.size(); ++i) contour.push_back(side[i]);
}

} // namespace

GeneratorSets enumerate_generators(const TriangleConfig& config) {
    const auto rep =
        partition_check(config.curve, config.n, config.m, config.p, config.eps, config.eta);
    GeneratorSets gens;
    for (const auto& pair : rep.matching) {
        if (pair.on_curve.piece == Crossing::Piece::Diag) {
            const auto idx = std::to_string(gens.y1.size());
            gens.y1.push_back({pair.on_line, "a1_" + idx, 0});
            gens.yeps_diag.push_back({pair.on_curve, "aeps1_" + idx, 0});
        } else {
            const auto idx = std::to_string(gens.y0.size());
            gens.y0.push_back({pair.on_line, "a0_" + idx, 0});
            gens.yeps_wall.push_back({pair.on_curve, "aeps0_" + idx, 0});
        }
    }
    return gens;
}

void assign_degrees(GeneratorSets& gens, DegreeMode mode) {
    if (mode == DegreeMode::AllZero) {
        for (auto* list : {&gens.y1, &gens.yeps_diag, &gens.yeps_wall, &gens.y0})
            for (auto& g : *list) g.degree = 0;
        return;
    }
    for (size_t i = 0; i < gens.y1.size(); ++i)
        gens.y1[i].degree = gens.yeps_diag[i].degree = static_cast<int>(i) + 1;
    for (size_t j = 0; j < gens.y0.size(); ++j)
        gens.y0[j].degree = gens.yeps_wall[j].degree = -static_cast<int>(j) - 1;
}

TriangleSet enumerate_triangles(const TriangleConfig& config, const GeneratorSets& gens,
                                CobordismTag tag, size_t source, size_t target,
                                bool sector_wall) {
    const auto profile = build_refined_profile(config.n, config.p, config.eps);

    const Generator* src = nullptr;
    const Generator* tgt = nullptr;
    if (tag == CobordismTag::W1) {
        src = &gens.y1.at(source);
        tgt = sector_wall ? &gens.yeps_wall.at(target) : &gens.yeps_diag.at(target);
    } else {
        src = sector_wall ? &gens.yeps_wall.at(source) : &gens.yeps_diag.at(source);
        tgt = &gens.y0.at(target);
    }

    TriangleSet out;
    out.source_id = src->id;
    out.target_id = tgt->id;
    if (src->at.component != tgt->at.component) {
        out.diagnostic = "generators lie on different curve components";
        return out;
    }
    const auto& comp = config.curve.components.at(src->at.component);

    for (const auto& path : curve_subpaths(comp, tgt->at, src->at)) {
        Triangle tri;
        tri.tag = tag;
        tri.a_minus = src->at.point;
        tri.a_plus = tgt->at.point;
        tri.curve_side = path;

        if (tag == CobordismTag::W1) {
            // sides: Y1-lift of the source, then the perturbed copy of the target
            tri.vartheta = theta_on_y1(config, profile, tgt->at.copy, src->at.level);
            tri.side_a = {tri.a_minus, tri.vartheta};
            tri.side_b = copy_path(config, profile, tgt->at.copy, tri.vartheta.u, tri.a_plus.u);
        } else {
            // sides: the perturbed copy of the source, then the target's Y0 line
            const Rat c = tgt->at.level;
            tri.vartheta = plane_point(c, copy_value(config, profile, src->at.copy, c));
            tri.side_a = copy_path(config, profile, src->at.copy, tri.a_minus.u, c);
            tri.side_b = {tri.vartheta, tri.a_plus};
        }

        std::vector<TorusPoint> contour = tri.side_a;
        append_dropping_joint(contour, tri.side_b);
        append_dropping_joint(contour, tri.curve_side);
        contour.pop_back(); // closes back to a_minus
        Rat twice_area;
        if (shoelace_sign(contour, &twice_area) == 0)
            throw genericity_error("degenerate triangle contour between " + src->id + " and " +
                                   tgt->id);
        tri.area = twice_area / Rat(2);

        const auto& prev = tri.side_a[tri.side_a.size() - 2];
        const auto& next = tri.side_b[1];
        const Rat din_u = tri.vartheta.u - prev.u, din_v = tri.vartheta.v - prev.v;
        const Rat dout_u = next.u - tri.vartheta.u, dout_v = next.v - tri.vartheta.v;
        if ((din_u * dout_v - din_v * dout_u).is_zero())
            throw genericity_error("flat corner at vartheta between " + src->id + " and " +
                                   tgt->id);

        // Coherent-orientation model: the counting sign is the product of
        // the generator crossing orientations, with the W0 source-sector
        // factor carrying the orientation reversal of the composite gluing.
        int sign = src->at.sign * tgt->at.sign * config.ambient;
        if (tag == CobordismTag::W0 && src->at.piece == Crossing::Piece::Diag) sign = -sign;
        tri.sign = sign;
        out.triangles.push_back(std::move(tri));
    }
    return out;
}

namespace {

// the minimal-area triangle of a set; equal-area ties are non-generic
const Triangle* minimal_triangle(const TriangleSet& set) {
    const Triangle* best = nullptr;
    for (const auto& t : set.triangles) {
        if (!best || t.area < best->area)
            best = &t;
        else if (t.area == best->area)
            throw genericity_error("equal-area triangles between " + set.source_id + " and " +
                                   set.target_id);
    }
    return best;
}

} // namespace

std::vector<std::vector<int>> w_matrix(const TriangleConfig& config, const GeneratorSets& gens,
                                       CobordismTag tag) {
    const size_t D = gens.y1.size();
    const size_t W = gens.y0.size();

    if (tag == CobordismTag::W1) {
        std::vector<std::vector<int>> matrix(D + W, std::vector<int>(D, 0));
        for (size_t i = 0; i < D; ++i) {
            for (size_t t = 0; t < D; ++t) {
                if (gens.yeps_diag[t].degree != gens.y1[i].degree) continue;
                if (t != i) continue; // eps -> 0 degeneration: trajectory shadows die
                const auto set = enumerate_triangles(config, gens, tag, i, t, false);
                if (const Triangle* tri = minimal_triangle(set)) matrix[t][i] = tri->sign;
            }
            for (size_t j = 0; j < W; ++j) {
                if (gens.yeps_wall[j].degree != gens.y1[i].degree) continue;
                const auto set = enumerate_triangles(config, gens, tag, i, j, true);
                if (const Triangle* tri = minimal_triangle(set)) matrix[D + j][i] = tri->sign;
            }
        }
        return matrix;
    }

    std::vector<std::vector<int>> matrix(W, std::vector<int>(D + W, 0));
    for (size_t j = 0; j < W; ++j) {
        for (size_t i = 0; i < D; ++i) {
            if (gens.y0[j].degree != gens.yeps_diag[i].degree) continue;
            const auto set = enumerate_triangles(config, gens, tag, i, j, false);
            if (const Triangle* tri = minimal_triangle(set)) matrix[j][i] = tri->sign;
        }
        for (size_t t = 0; t < W; ++t) {
            if (gens.y0[j].degree != gens.yeps_wall[t].degree) continue;
            if (t != j) continue; // eps -> 0 degeneration
            const auto set = enumerate_triangles(config, gens, tag, t, j, true);
            if (const Triangle* tri = minimal_triangle(set)) matrix[j][D + t] = tri->sign;
        }
    }
    return matrix;
}

CancellationReport w1_w0_cancellation(const TriangleConfig& config) {
    CancellationReport report;
    auto gens = enumerate_generators(config);
    assign_degrees(gens, DegreeMode::AllZero);

    report.w1 = w_matrix(config, gens, CobordismTag::W1);
    report.w0 = w_matrix(config, gens, CobordismTag::W0);

    const size_t D = gens.y1.size();
    const size_t W = gens.y0.size();
    report.product.assign(W, std::vector<int>(D, 0));
    for (size_t j = 0; j < W; ++j)
        for (size_t i = 0; i < D; ++i) {
            int acc = 0;
            for (size_t mid = 0; mid < D + W; ++mid)
                acc += report.w0[j][mid] * report.w1[mid][i];
            report.product[j][i] = acc;
        }
    report.product_zero = true;
    for (const auto& row : report.product)
        for (int v : row)
            if (v != 0) report.product_zero = false;

    bool all_matched = true;
    for (size_t i = 0; i < D; ++i) {
        for (size_t j = 0; j < W; ++j) {
            const auto xi_w1 = enumerate_triangles(config, gens, CobordismTag::W1, i, j, true);
            const auto xi_w0 = enumerate_triangles(config, gens, CobordismTag::W0, i, j, false);
            if (xi_w1.triangles.size() != xi_w0.triangles.size()) {
                all_matched = false;
                report.unmatched.push_back("pair (" + gens.y1[i].id + ", " + gens.y0[j].id +
                                           "): " + std::to_string(xi_w1.triangles.size()) +
                                           " vs " + std::to_string(xi_w0.triangles.size()) +
                                           " triangles");
                continue;
            }
            for (size_t k = 0; k < xi_w1.triangles.size(); ++k) {
                const int s1 = xi_w1.triangles[k].sign;
                const int s0 = xi_w0.triangles[k].sign;
                if (s1 + s0 != 0) {
                    all_matched = false;
                    report.unmatched.push_back("pair (" + gens.y1[i].id + ", " + gens.y0[j].id +
                                               ") triangle " + std::to_string(k) +
                                               ": signs do not reverse");
                    continue;
                }
                report.pairs.push_back({i, j, s1, s0});
            }
        }
    }
    report.ok = all_matched && report.product_zero;
    return report;
}

std::vector<Int> connecting_map(const std::vector<std::vector<Int>>& flow,
                                const std::vector<std::vector<Int>>& boundary_y0,
                                const std::vector<Int>& cycle) {
    for (const auto& row : boundary_y0) {
        if (row.size() != cycle.size())
            throw precondition_error("connecting_map: dimension mismatch");
        Int acc = 0;
        for (size_t i = 0; i < row.size(); ++i) acc += row[i] * cycle[i];
        if (acc != 0) throw precondition_error("connecting_map: input is not a cycle");
    }
    std::vector<Int> image(flow.size(), Int(0));
    for (size_t r = 0; r < flow.size(); ++r) {
        if (flow[r].size() != cycle.size())
            throw precondition_error("connecting_map: dimension mismatch");
        for (size_t c = 0; c < cycle.size(); ++c) image[r] += flow[r][c] * cycle[c];
    }
    return image;
}

} // namespace surgtri
