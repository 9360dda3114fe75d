#include "doctest.h"

#include <numeric>

#include "oracle.hpp"
#include "surgtri/counting.hpp"
#include "surgtri/curve_gen.hpp"
#include "surgtri/invariants.hpp"
#include "surgtri/triangles.hpp"

using namespace surgtri;

namespace {

TorusPoint pt(const Rat& u, const Rat& v) { return plane_point(u, v); }

} // namespace

TEST_CASE("spectral flow sums over the lifts") {
    // loop-only curve: zero over any theta intervals
    CurveComponent l;
    l.closed = true;
    l.vertices = {pt(Rat(5, 97), Rat(50, 97)), pt(Rat(30, 97), Rat(55, 97)),
                  pt(Rat(20, 97), Rat(80, 97))};
    const auto loops = make_boundary_curve(3, Rat(0), {l});
    const auto thetas = theta_points(2, 3, Rat(0), 3, Rat(1, 20));
    CHECK(spectral_flow_sum(loops, thetas, 0, 1) == 0);
    CHECK(spectral_flow_sum(loops, thetas, 0, 2) == 0);

    // n = 1 reduces to a single spectral_flow call
    CurveComponent a;
    a.vertices = {pt(Rat(0), Rat(3, 2)), pt(Rat(1, 3), Rat(5, 4)), pt(Rat(0), Rat(1, 2))};
    const auto curve1 = make_boundary_curve(1, Rat(0), {a});
    const auto th1 = theta_points(1, 0, Rat(0), 1, Rat(1, 20));
    CHECK(spectral_flow_sum(curve1, th1, 0, 1) ==
          spectral_flow(curve1, Rat(0), th1.thetas[0].v, 0).value);

    // n = 3 with endpoints in distinct lifts: the sum collects each lift
    CurveComponent b1, b2, b3;
    b1.vertices = {pt(Rat(0), Rat(1, 97)), pt(Rat(1, 3), Rat(60, 97)), pt(Rat(0), Rat(120, 97))};
    b2.vertices = {pt(Rat(0), Rat(195, 97)), pt(Rat(1, 3), Rat(250, 97)),
                   pt(Rat(0), Rat(314, 97))};
    b3.vertices = {pt(Rat(0), Rat(389, 97)), pt(Rat(1, 3), Rat(450, 97)),
                   pt(Rat(0), Rat(508, 97))};
    const auto curve3 = make_boundary_curve(3, Rat(0), {b1, b2, b3});
    const auto th3 = theta_points(1, 0, Rat(0), 3, Rat(1, 20));
    int per_lift = 0;
    for (int k = 0; k < 3; ++k)
        per_lift += spectral_flow(curve3, Rat(0), th3.thetas[0].v, k).value;
    CHECK(spectral_flow_sum(curve3, th3, 0, 1) == per_lift);
}

TEST_CASE("surgery identity on the empty curve") {
    const auto curve = make_boundary_curve(1, Rat(0), {});
    const auto rep = surgery_count_identity(curve, 3, 1, 1, Rat(0), Rat(1, 20));
    CHECK(rep.lhs == 0);
    CHECK(rep.count_y == 0);
    CHECK(rep.count_y0 == 0);
    CHECK(rep.sf_total == 0);
    CHECK(rep.identity_holds);
}

TEST_CASE("sw_hat_sum_surgery all-zero reduction at n = 1") {
    // with zero base sums the surgery sum is -|H1| p s(p,q) / 2
    const auto problem = make_surgery_problem(1, 5, 3, 7, Rat(0), make_alexander(1, {}));
    CHECK(sw_hat_sum_surgery(problem, Rat(0), Rat(0)) ==
          -Rat(7) * Rat(5) * dedekind_term(5, 3) / Rat(2));
}

TEST_CASE("cancellation on a configuration with no generators") {
    TriangleConfig cfg;
    cfg.curve = make_boundary_curve(1, Rat(0), {});
    cfg.eps = Rat(1, 1000);
    cfg.eta = Rat(1, 20);
    const auto rep = w1_w0_cancellation(cfg);
    CHECK(rep.ok);
    CHECK(rep.pairs.empty());
    CHECK(rep.product_zero);
}

TEST_CASE("counts are invariant under random subdividing moves") {
    // elementary PL move: split a segment at an interior grid point and
    // nudge; every signed count must be unchanged while the move stays
    // generic
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 30 && checked < 12; ++seed) {
        CurveGenParams params;
        params.n = 1 + int(seed % 2);
        params.u_sigma = Rat(0);
        params.arcs = 1;
        params.loops = 1;
        params.seed = seed * 31337;
        auto curve = random_boundary_curve(params);

        auto moved = curve;
        auto& vs = moved.components[0].vertices;
        const TorusPoint mid = pt((vs[0].u + vs[1].u) / Rat(2) + Rat(1, 9409),
                                  (vs[0].v + vs[1].v) / Rat(2) + Rat(1, 9409));
        vs.insert(vs.begin() + 1, mid);

        const auto y1 = line_family(reducible_line(LineKind::Y1, 0, Rat(0)), params.n, false);
        const auto vert = vertical_family(Rat(1, 20));
        const auto slope = slope_family(slope_curve(2, 1), Rat(1, 20));
        try {
            for (const auto& fam : {y1, vert, slope})
                CHECK(signed_count(curve, fam) == signed_count(moved, fam));
            ++checked;
        } catch (const genericity_error&) {
            continue;
        }
    }
    CHECK(checked >= 12);
}

TEST_CASE("identities across the reducible-circle positions u_sigma = 2j/n") {
    int part = 0, surg = 0;
    for (std::uint64_t seed = 1; seed <= 160 && (part < 40 || surg < 40); ++seed) {
        const int n = 1 + int(seed % 4);
        const int m = int((seed / 5) % n);
        const int p_off = int((seed / 7) % n);
        const Rat u_sigma = Rat(2 * int((seed / 11) % n), n);
        CurveGenParams params;
        params.n = n;
        params.u_sigma = u_sigma;
        params.arcs = 1 + int(seed % 3);
        params.loops = 1;
        params.bad_arcs = int(seed % 2);
        params.seed = seed * 48271;
        try {
            const auto curve = random_boundary_curve(params);
            if (part < 40) {
                const auto rep =
                    partition_check(curve, n, m, p_off, Rat(1, 1940), Rat(1, 20));
                CHECK(rep.identity_holds);
                ++part;
            }
            if (surg < 40) {
                const long long p = 1 + (seed % 5);
                const long long q = std::vector<long long>{-3, -1, 1, 2, 5}[seed % 5];
                if (std::gcd(p, std::llabs(q)) == 1) {
                    const auto rep =
                        surgery_count_identity(curve, p, q, n, u_sigma, Rat(1, 20));
                    CHECK(rep.identity_holds);
                    CHECK(rep.routes_agree);
                    ++surg;
                }
            }
        } catch (const genericity_error&) {
            continue; // e.g. u_sigma = 1 puts the circle through the bad point
        } catch (const instability_error&) {
            continue;
        }
    }
    CHECK(part >= 40);
    CHECK(surg >= 40);
}
