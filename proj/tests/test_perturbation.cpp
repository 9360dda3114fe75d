#include "doctest.h"

#include "surgtri/perturbation.hpp"

using namespace surgtri;

TEST_CASE("basic profile contract") {
    for (const Rat& eps : {Rat(1, 4), Rat(1, 10), Rat(1, 100)}) {
        const auto prof = build_basic_profile(eps);
        const auto rep = verify_profile_contract(prof);
        INFO("eps = ", eps.str());
        for (const auto& f : rep.failures) INFO(f);
        CHECK(rep.ok);
    }
    CHECK_THROWS_AS(build_basic_profile(Rat(1, 2)), precondition_error);
    CHECK_THROWS_AS(build_basic_profile(Rat(0)), precondition_error);
}

TEST_CASE("basic profile pointwise") {
    const auto prof = build_basic_profile(Rat(1, 10));
    CHECK(eval_profile(prof, Rat(0)).is_zero());
    CHECK((eval_profile(prof, Rat(1, 2)) - Rat(1, 2)).abs() < Rat(1, 10));
    // mirror in derivative form at s = 1/4
    CHECK(eval_profile(prof, Rat(5, 4)) == -eval_profile(prof, Rat(3, 4)));
    // periodicity at t = -1/3
    CHECK(eval_profile(prof, Rat(-1, 3) + Rat(2)) == eval_profile(prof, Rat(-1, 3)));
    // stored breakpoint values are reproduced exactly
    for (const auto& [t, v] : prof.breakpoints) CHECK(eval_profile(prof, t) == v);
    // range on [-1, 1]
    for (const Rat& t : {Rat(-1), Rat(-1, 2), Rat(0), Rat(9, 10), Rat(1)}) {
        CHECK(eval_profile(prof, t) >= Rat(-1));
        CHECK(eval_profile(prof, t) <= Rat(1));
    }
}

TEST_CASE("refined profile contract") {
    for (int n = 1; n <= 6; ++n) {
        for (int p = 0; p < n; ++p) {
            for (const Rat& eps : {Rat(1, 4), Rat(1, 10), Rat(1, 100)}) {
                const auto prof = build_refined_profile(n, p, eps);
                const auto rep = verify_profile_contract(prof);
                INFO("n = ", n, " p = ", p, " eps = ", eps.str());
                for (const auto& f : rep.failures) INFO(f);
                CHECK(rep.ok);
            }
        }
    }
    CHECK_THROWS_AS(build_refined_profile(2, 2, Rat(1, 10)), precondition_error);
    CHECK_THROWS_AS(build_refined_profile(2, -1, Rat(1, 10)), precondition_error);
    CHECK_THROWS_AS(build_refined_profile(2, 0, Rat(1, 2)), precondition_error);
}

TEST_CASE("refined profile geometry") {
    const auto prof = build_refined_profile(4, 2, Rat(1, 10));
    const Rat delta = prof.diag_offset;

    // diagonal pieces sit exactly delta below v = u + 1 (mod the 2n rise)
    CHECK(eval_profile(prof, Rat(6)) == Rat(6) + Rat(1) - delta + Rat(8));
    // periodic extension: rise 4n per period 2n
    for (const Rat& t : {Rat(0), Rat(1, 3), Rat(39, 20)})
        CHECK(eval_profile(prof, t + Rat(8)) == eval_profile(prof, t) + Rat(16));
    // wall positions differ by 2(p' - p) in u between offsets
    const auto prof0 = build_refined_profile(4, 0, Rat(1, 10));
    CHECK(prof.breakpoints[0].first - prof0.breakpoints[0].first == Rat(4));
}

TEST_CASE("limit lines") {
    SUBCASE("n=1, p=0") {
        const auto lines = limit_lines(build_refined_profile(1, 0, Rat(1, 8)));
        REQUIRE(lines.size() == 2);
        CHECK(lines[0].kind == LineKind::Y1);
        CHECK(lines[0].k == 0);
        CHECK(lines[1].kind == LineKind::Y0);
        CHECK(lines[1].k == 0); // u = 0 representative, family u = 2k
    }
    SUBCASE("n=4, p=2 walls at u = 4 mod 8") {
        const auto prof = build_refined_profile(4, 2, Rat(1, 8));
        const auto lines = limit_lines(prof);
        CHECK(lines[1].kind == LineKind::Y0);
        CHECK(Rat(2 * lines[1].k) == Rat(4));
        CHECK(prof.period_len == Rat(8));
    }
    SUBCASE("n=2, p=1 walls at u = 2 mod 4") {
        const auto lines = limit_lines(build_refined_profile(2, 1, Rat(1, 8)));
        CHECK(Rat(2 * lines[1].k) == Rat(2));
    }
    CHECK_THROWS_AS(limit_lines(build_basic_profile(Rat(1, 10))), precondition_error);
}

TEST_CASE("monotone convergence into the eps-tube") {
    // for eps1 < eps2 the eps1-graph stays in the eps2-tube of the limit
    // set wherever the eps2-graph does; since each graph lies in its own
    // eps-tube everywhere, check the tube inclusion on breakpoints
    const auto fine = build_refined_profile(3, 1, Rat(1, 100));
    const Rat eps2(1, 10);
    const Rat wall(2);
    for (const auto& [t, v] : fine.breakpoints) {
        const bool near_wall = (t - wall).abs() <= eps2;
        const bool near_diag = (v - t - Rat(1)).abs() < eps2 ||
                               (v - t - Rat(1) - Rat(6)).abs() < eps2;
        CHECK((near_wall || near_diag));
    }
}

TEST_CASE("perturbed curve evaluation") {
    PerturbedCurve curve{build_refined_profile(1, 0, Rat(1, 10)), Rat(1, 20), 0};
    // right of the p=0 wall the diagonal carries the accumulated rise 2n:
    // v = (u - eta) + 1 - delta + 2n + eta = u + 1 - delta + 2
    CHECK(curve.value_at(Rat(1)) == Rat(4) - curve.profile.diag_offset);
    // left of the wall: v = u + 1 - delta
    CHECK(curve.value_at(Rat(-1, 2)) == Rat(1, 2) - curve.profile.diag_offset);
    // m shifts by 2m
    PerturbedCurve curve2{build_refined_profile(1, 0, Rat(1, 10)), Rat(1, 20), 3};
    CHECK(curve2.value_at(Rat(1)) == curve.value_at(Rat(1)) + Rat(6));
}
