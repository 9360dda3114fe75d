#include "surgtri/curve.hpp"

#include <string>

namespace surgtri {

namespace {

bool is_bad_lift(const TorusPoint& p) {
    return p.u.is_integer() && p.v.is_integer() && ((p.u.num() % 2) != 0) &&
           ((p.v.num() % 2) != 0);
}

} // namespace

BoundaryCurve make_boundary_curve(int n, const Rat& u_sigma,
                                  std::vector<CurveComponent> components) {
    if (n < 1) throw precondition_error("boundary curve: n must be positive");
    for (size_t c = 0; c < components.size(); ++c) {
        auto& comp = components[c];
        const std::string where = "component " + std::to_string(c);
        if (comp.closed && comp.vertices.size() >= 2 &&
            comp.vertices.front() == comp.vertices.back())
            comp.vertices.pop_back();
        if (comp.vertices.size() < 2)
            throw precondition_error("boundary curve: " + where + " needs two vertices");
        if (comp.closed && comp.vertices.size() < 3)
            throw precondition_error("boundary curve: " + where + " loop needs three vertices");
        for (size_t i = 0; i + 1 < comp.vertices.size(); ++i)
            if (comp.vertices[i] == comp.vertices[i + 1])
                throw precondition_error("boundary curve: " + where + " repeats a vertex");
        if (comp.closed && comp.vertices.front() == comp.vertices.back())
            throw precondition_error("boundary curve: " + where + " repeats a vertex");
        if (!comp.closed) {
            const auto check_end = [&](const TorusPoint& pt, EndpointTag tag) {
                if (tag == EndpointTag::Reducible && pt.u != u_sigma)
                    throw precondition_error("boundary curve: " + where +
                                             " endpoint off the reducible circle");
                if (tag == EndpointTag::Bad && !is_bad_lift(pt))
                    throw precondition_error("boundary curve: " + where +
                                             " bad-tagged endpoint off the bad point");
            };
            check_end(comp.vertices.front(), comp.start_tag);
            check_end(comp.vertices.back(), comp.end_tag);
        }
    }
    return BoundaryCurve{n, u_sigma, std::move(components)};
}

std::vector<CurveEndpoint> curve_endpoints(const BoundaryCurve& curve) {
    std::vector<CurveEndpoint> out;
    for (size_t c = 0; c < curve.components.size(); ++c) {
        const auto& comp = curve.components[c];
        if (comp.closed) continue;
        out.push_back({comp.vertices.front(), -1, comp.start_tag, c});
        out.push_back({comp.vertices.back(), +1, comp.end_tag, c});
    }
    return out;
}

} // namespace surgtri
