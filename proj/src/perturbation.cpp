#include "surgtri/perturbation.hpp"

#include <algorithm>

namespace surgtri {

PerturbationProfile build_basic_profile(const Rat& eps) {
    if (!(Rat(0) < eps && eps < Rat(1, 2)))
        throw precondition_error("build_basic_profile: need 0 < eps < 1/2");

    const Rat one(1);
    const Rat a = one - eps;       // flat zone boundary
    const Rat peak = a * a;        // value (1-eps)^2 at t = 1-eps

    PerturbationProfile prof;
    prof.kind = ProfileKind::Basic;
    prof.eps = eps;
    prof.diag_offset = Rat(0);
    prof.period_len = Rat(2);
    prof.period_rise = Rat(0);
    prof.breakpoints = {
        {Rat(-1), Rat(0)},
        {-a, -peak},
        {a, peak},
        {Rat(1), Rat(0)},
    };
    return prof;
}

PerturbationProfile build_refined_profile(int n, int p_offset, const Rat& eps) {
    if (n < 1) throw precondition_error("build_refined_profile: n must be positive");
    if (p_offset < 0 || p_offset >= n)
        throw precondition_error("build_refined_profile: need 0 <= p_offset < n");
    if (!(Rat(0) < eps && eps <= Rat(1, 4)))
        throw precondition_error("build_refined_profile: need 0 < eps <= 1/4");

    const Rat delta = eps / Rat(2);
    const Rat wall(2 * p_offset);
    const Rat two_n(2 * n);

    PerturbationProfile prof;
    prof.kind = ProfileKind::Refined;
    prof.n = n;
    prof.p_offset = p_offset;
    prof.eps = eps;
    prof.diag_offset = delta;
    prof.period_len = two_n;
    prof.period_rise = Rat(4 * n);
    // wall entry, wall exit (one period up), next wall entry
    prof.breakpoints = {
        {wall - eps, wall + Rat(1) - eps - delta},
        {wall + eps, wall + two_n + Rat(1) + eps - delta},
        {wall + two_n - eps, wall + two_n + Rat(1) - eps - delta + two_n},
    };
    return prof;
}

Rat eval_profile(const PerturbationProfile& profile, const Rat& t) {
    const auto& bp = profile.breakpoints;
    const Rat t0 = bp.front().first;
    const Rat k((t - t0) / profile.period_len);
    const Rat shift(k.floor());
    const Rat tau = t - shift * profile.period_len;
    const Rat rise = shift * profile.period_rise;

    for (size_t i = 0; i + 1 < bp.size(); ++i) {
        const auto& [ta, va] = bp[i];
        const auto& [tb, vb] = bp[i + 1];
        if (tau >= ta && tau <= tb) {
            if (tau == ta) return va + rise;
            return va + (vb - va) * (tau - ta) / (tb - ta) + rise;
        }
    }
    // builders store breakpoints covering one closed period
    throw integrity_error("eval_profile: breakpoints do not cover the period");
}

std::vector<ReducibleLine> limit_lines(const PerturbationProfile& profile) {
    if (profile.kind != ProfileKind::Refined)
        throw precondition_error("limit_lines: refined profile required");
    return {
        reducible_line(LineKind::Y1, 0, Rat(0)),
        reducible_line(LineKind::Y0, profile.p_offset, Rat(0)),
    };
}

Rat PerturbedCurve::value_at(const Rat& u) const {
    return eval_profile(profile, u - eta) + eta + Rat(2 * m);
}

namespace {

void check(ProfileCheckReport& report, bool cond, const std::string& what) {
    if (!cond) {
        report.ok = false;
        report.failures.push_back(what);
    }
}

} // namespace

ProfileCheckReport verify_profile_contract(const PerturbationProfile& prof) {
    ProfileCheckReport report;
    const Rat eps = prof.eps;

    // sample set: breakpoints, segment midpoints, and period translates
    std::vector<Rat> samples;
    for (const auto& [t, v] : prof.breakpoints) samples.push_back(t);
    for (size_t i = 0; i + 1 < prof.breakpoints.size(); ++i)
        samples.push_back((prof.breakpoints[i].first + prof.breakpoints[i + 1].first) / Rat(2));

    for (const Rat& t : samples) {
        const Rat here = eval_profile(prof, t);
        const Rat there = eval_profile(prof, t + prof.period_len);
        check(report, there == here + prof.period_rise,
              "periodic extension fails at t = " + t.str());
        const Rat back = eval_profile(prof, t - prof.period_len);
        check(report, back == here - prof.period_rise,
              "periodic extension fails at t = " + t.str() + " - period");
    }

    if (prof.kind == ProfileKind::Basic) {
        // range [-1, 1] on [-1, 1], attained at breakpoints of a PL function
        for (const auto& [t, v] : prof.breakpoints)
            check(report, v >= Rat(-1) && v <= Rat(1),
                  "range bound fails at breakpoint t = " + t.str());
        // |f'(t) - t| < eps on [-1+eps, 1-eps]; the deviation is PL, so its
        // sup sits at a breakpoint or interval end
        std::vector<Rat> flat = {Rat(-1) + eps, Rat(1) - eps};
        for (const auto& [t, v] : prof.breakpoints)
            if (t > Rat(-1) + eps && t < Rat(1) - eps) flat.push_back(t);
        for (const Rat& t : flat)
            check(report, (eval_profile(prof, t) - t).abs() < eps,
                  "approximation bound fails at t = " + t.str());
        // mirror property, in the derivative form f'(1-t) = -f'(1+t)
        for (const Rat& s : {Rat(1, 4), Rat(1, 3), Rat(2, 5), eps / Rat(2), Rat(1) - eps}) {
            check(report,
                  eval_profile(prof, Rat(1) - s) == -eval_profile(prof, Rat(1) + s),
                  "mirror antisymmetry fails at s = " + s.str());
        }
        check(report, eval_profile(prof, Rat(0)).is_zero(), "f'(0) != 0");
        check(report, eval_profile(prof, Rat(1)).is_zero(), "f'(1) != 0");
    } else {
        const Rat wall(2 * prof.p_offset);
        const Rat delta = prof.diag_offset;
        check(report, delta < eps, "diagonal offset must stay below eps");
        // wall pieces lie within eps of u = 2p (mod 2n); the diagonal piece
        // within eps of v = u + 1.  Piecewise linear, so endpoints suffice.
        const auto& bp = prof.breakpoints;
        check(report, bp.size() == 3, "refined profile stores three breakpoints");
        check(report, (bp[0].first - wall).abs() <= eps, "wall entry off position");
        check(report, (bp[1].first - wall).abs() <= eps, "wall exit off position");
        for (size_t i : {size_t(1), size_t(2)}) {
            const Rat dev = bp[i].second - bp[i].first - Rat(1) - Rat(2 * prof.n);
            check(report, dev.abs() < eps, "diagonal off the Y1-line beyond eps");
        }
        const Rat dev0 = bp[0].second - bp[0].first - Rat(1);
        check(report, dev0.abs() < eps, "diagonal off the Y1-line beyond eps at wall entry");
        // transversality: wall slope exceeds 1 and is finite; diagonal slope
        // is exactly 1 and misses the Y1-line by delta > 0
        const Rat wall_slope = (bp[1].second - bp[0].second) / (bp[1].first - bp[0].first);
        check(report, wall_slope > Rat(1), "wall slope must exceed the Y1 slope");
        const Rat diag_slope = (bp[2].second - bp[1].second) / (bp[2].first - bp[1].first);
        check(report, diag_slope == Rat(1), "diagonal slope must be 1");
        check(report, delta > Rat(0), "diagonal must not coincide with the Y1-line");
    }
    return report;
}

} // namespace surgtri
