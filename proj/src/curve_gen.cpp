#include "surgtri/curve_gen.hpp"

#include <random>

namespace surgtri {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // inclusive range; plain modulo keeps results identical across platforms
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(engine_() % std::uint64_t(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace

BoundaryCurve random_boundary_curve(const CurveGenParams& params) {
    if (params.n < 1) throw precondition_error("curve generator: n must be positive");
    Rng rng(params.seed);
    const int n = params.n;

    const auto interior_point = [&](const TorusPoint* prev) {
        while (true) {
            const Rat u = Rat(rng.range(-1, 2 * n)) + Rat(rng.range(1, 47), 97);
            const Rat v = Rat(rng.range(-1, 2 * n + 1)) + Rat(rng.range(49, 96), 97);
            const TorusPoint pt = plane_point(u, v);
            if (!prev || !(pt == *prev)) return pt;
        }
    };
    const auto circle_point = [&](const TorusPoint* prev) {
        while (true) {
            const Rat v = Rat(rng.range(-1, 2 * n + 1)) + Rat(rng.range(49, 96), 97);
            const TorusPoint pt = plane_point(params.u_sigma, v);
            if (!prev || !(pt == *prev)) return pt;
        }
    };
    const auto bad_point = [&] {
        return plane_point(Rat(1 + 2 * rng.range(0, n)), Rat(1 + 2 * rng.range(0, n)));
    };

    std::vector<CurveComponent> components;
    for (int a = 0; a < params.arcs + params.bad_arcs; ++a) {
        CurveComponent comp;
        const bool bad = a >= params.arcs;
        comp.start_tag = EndpointTag::Reducible;
        comp.end_tag = bad ? EndpointTag::Bad : EndpointTag::Reducible;
        comp.vertices.push_back(circle_point(nullptr));
        const int interior = static_cast<int>(rng.range(1, params.max_interior));
        for (int i = 0; i < interior; ++i)
            comp.vertices.push_back(interior_point(&comp.vertices.back()));
        comp.vertices.push_back(bad ? bad_point() : circle_point(&comp.vertices.back()));
        components.push_back(std::move(comp));
    }
    for (int l = 0; l < params.loops; ++l) {
        CurveComponent comp;
        comp.closed = true;
        const int count = static_cast<int>(rng.range(3, std::max(3, params.max_interior + 2)));
        for (int i = 0; i < count; ++i)
            comp.vertices.push_back(interior_point(i ? &comp.vertices.back() : nullptr));
        if (comp.vertices.front() == comp.vertices.back()) comp.vertices.pop_back();
        components.push_back(std::move(comp));
    }
    return make_boundary_curve(n, params.u_sigma, std::move(components));
}

} // namespace surgtri
