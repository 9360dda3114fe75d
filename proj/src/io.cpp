#include "surgtri/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace surgtri {

namespace {

using nlohmann::json;

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw parse_error("expected a rational as \"num/den\" or an integer");
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw parse_error("expected an integer");
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

void require_kind(const json& j, const std::string& kind) {
    if (!j.is_object()) throw parse_error("expected a JSON object");
    if (!j.contains("format_version") || j["format_version"] != kFormatVersion)
        throw parse_error("missing or unsupported format_version");
    if (!j.contains("kind") || j["kind"] != kind)
        throw parse_error("expected kind \"" + kind + "\"");
}

template <typename T>
T field(const json& j, const std::string& name, T fallback) {
    if (!j.contains(name)) return fallback;
    return j[name].get<T>();
}

const json& need(const json& j, const std::string& name) {
    if (!j.contains(name)) throw parse_error("missing field \"" + name + "\"");
    return j[name];
}

json curve_body(const CurveFile& file) {
    const auto& cfg = file.config;
    json j;
    j["n"] = cfg.n;
    j["m"] = cfg.m;
    j["p"] = cfg.p;
    j["eps"] = rat_to_json(cfg.eps);
    j["eta"] = rat_to_json(cfg.eta);
    j["ambient"] = cfg.ambient;
    j["u_sigma"] = rat_to_json(cfg.curve.u_sigma);
    json comps = json::array();
    for (const auto& comp : cfg.curve.components) {
        json c;
        c["closed"] = comp.closed;
        if (!comp.closed) {
            c["start"] = comp.start_tag == EndpointTag::Bad ? "bad" : "reducible";
            c["end"] = comp.end_tag == EndpointTag::Bad ? "bad" : "reducible";
        }
        json vs = json::array();
        for (const auto& v : comp.vertices) vs.push_back({rat_to_json(v.u), rat_to_json(v.v)});
        c["vertices"] = std::move(vs);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    if (file.surgery) {
        j["surgery"] = {{"p", file.surgery->first.str()}, {"q", file.surgery->second.str()}};
    }
    if (file.expected_count_y || file.expected_count_y1 || file.expected_count_y0_total) {
        json e;
        if (file.expected_count_y) e["count_y"] = *file.expected_count_y;
        if (file.expected_count_y1) e["count_y1"] = *file.expected_count_y1;
        if (file.expected_count_y0_total) e["count_y0_total"] = *file.expected_count_y0_total;
        j["expected"] = std::move(e);
    }
    return j;
}

CurveFile curve_from_body(const json& j) {
    CurveFile file;
    auto& cfg = file.config;
    cfg.n = need(j, "n").get<int>();
    cfg.m = field(j, "m", 0);
    cfg.p = field(j, "p", 0);
    cfg.eps = rat_from_json(need(j, "eps"));
    cfg.eta = rat_from_json(need(j, "eta"));
    cfg.ambient = field(j, "ambient", 1);

    std::vector<CurveComponent> comps;
    for (const auto& c : need(j, "components")) {
        CurveComponent comp;
        comp.closed = field(c, "closed", false);
        const auto tag = [](const std::string& s) {
            if (s == "bad") return EndpointTag::Bad;
            if (s == "reducible") return EndpointTag::Reducible;
            throw parse_error("endpoint tag must be \"reducible\" or \"bad\"");
        };
        if (!comp.closed) {
            comp.start_tag = tag(field<std::string>(c, "start", "reducible"));
            comp.end_tag = tag(field<std::string>(c, "end", "reducible"));
        }
        for (const auto& v : need(c, "vertices")) {
            if (!v.is_array() || v.size() != 2)
                throw parse_error("vertex must be a [u, v] pair");
            comp.vertices.push_back(plane_point(rat_from_json(v[0]), rat_from_json(v[1])));
        }
        comps.push_back(std::move(comp));
    }
    cfg.curve = make_boundary_curve(cfg.n, rat_from_json(need(j, "u_sigma")), std::move(comps));

    if (j.contains("surgery")) {
        file.surgery = {int_from_json(need(j["surgery"], "p")),
                        int_from_json(need(j["surgery"], "q"))};
    }
    if (j.contains("expected")) {
        const auto& e = j["expected"];
        if (e.contains("count_y")) file.expected_count_y = e["count_y"].get<int>();
        if (e.contains("count_y1")) file.expected_count_y1 = e["count_y1"].get<int>();
        if (e.contains("count_y0_total"))
            file.expected_count_y0_total = e["count_y0_total"].get<int>();
    }
    return file;
}

json complex_to_json(const GradedComplex& c) {
    json j;
    json gens = json::array();
    for (size_t i = 0; i < c.size(); ++i)
        gens.push_back({{"id", c.ids[i]}, {"degree", c.degrees[i]}});
    j["generators"] = std::move(gens);
    j["modulus"] = c.modulus;
    json diff = json::array();
    for (const auto& row : c.differential) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        diff.push_back(std::move(r));
    }
    j["differential"] = std::move(diff);
    return j;
}

GradedComplex complex_from_json(const json& j) {
    std::vector<std::string> ids;
    std::vector<int> degrees;
    for (const auto& g : need(j, "generators")) {
        ids.push_back(need(g, "id").get<std::string>());
        degrees.push_back(need(g, "degree").get<int>());
    }
    IMat diff;
    for (const auto& row : field(j, "differential", json::array())) {
        IVec r;
        for (const auto& v : row) r.push_back(int_from_json(v));
        diff.push_back(std::move(r));
    }
    try {
        return make_complex(std::move(ids), std::move(degrees), field(j, "modulus", 0),
                            std::move(diff));
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad complex: ") + e.what());
    }
}

json matrix_to_json(const IMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

IMat matrix_from_json(const json& j) {
    IMat m;
    for (const auto& row : j) {
        IVec r;
        for (const auto& v : row) r.push_back(int_from_json(v));
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

std::string serialize_surgery(const SurgeryProblem& problem) {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "surgery";
    j["n"] = problem.n;
    j["p"] = problem.p.str();
    j["q"] = problem.q.str();
    j["h1_order"] = problem.h1_order.str();
    j["lambda_bar"] = rat_to_json(problem.lambda_bar_y);
    json coeffs = json::array();
    for (const auto& a : problem.alexander.coeffs) coeffs.push_back(a.str());
    j["alexander"] = {{"torsion_order", problem.alexander.torsion_order.str()},
                      {"coeffs", std::move(coeffs)}};
    return j.dump(2) + "\n";
}

SurgeryProblem parse_surgery(const std::string& text) {
    const json j = parse_json(text);
    require_kind(j, "surgery");
    std::vector<Int> coeffs;
    const auto& alex = need(j, "alexander");
    for (const auto& a : field(alex, "coeffs", json::array())) coeffs.push_back(int_from_json(a));
    try {
        return make_surgery_problem(
            need(j, "n").get<int>(), int_from_json(need(j, "p")), int_from_json(need(j, "q")),
            int_from_json(need(j, "h1_order")), rat_from_json(need(j, "lambda_bar")),
            make_alexander(int_from_json(need(alex, "torsion_order")), std::move(coeffs)));
    } catch (const precondition_error&) {
        throw;
    }
}

std::string serialize_curve(const CurveFile& file) {
    json j = curve_body(file);
    j["format_version"] = kFormatVersion;
    j["kind"] = "curve";
    return j.dump(2) + "\n";
}

CurveFile parse_curve(const std::string& text) {
    const json j = parse_json(text);
    require_kind(j, "curve");
    return curve_from_body(j);
}

std::string serialize_triangle_config(const CurveFile& file) {
    json j = curve_body(file);
    j["format_version"] = kFormatVersion;
    j["kind"] = "triangle-config";
    return j.dump(2) + "\n";
}

CurveFile parse_triangle_config(const std::string& text) {
    const json j = parse_json(text);
    require_kind(j, "triangle-config");
    return curve_from_body(j);
}

std::string serialize_complex(const ComplexFile& file) {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "complex";
    j["y1"] = complex_to_json(file.y1);
    j["y"] = complex_to_json(file.y);
    json y0 = json::array();
    for (const auto& c : file.y0) y0.push_back(complex_to_json(c));
    j["y0"] = std::move(y0);
    j["w1"] = matrix_to_json(file.w1.matrix);
    j["w0"] = matrix_to_json(file.w0.matrix);
    j["delta"] = matrix_to_json(file.delta.matrix);
    return j.dump(2) + "\n";
}

ComplexFile parse_complex(const std::string& text) {
    const json j = parse_json(text);
    require_kind(j, "complex");
    ComplexFile file;
    file.y1 = complex_from_json(need(j, "y1"));
    file.y = complex_from_json(need(j, "y"));
    for (const auto& c : need(j, "y0")) file.y0.push_back(complex_from_json(c));
    file.w1 = {matrix_from_json(need(j, "w1")), 0};
    file.w0 = {matrix_from_json(need(j, "w0")), 0};
    file.delta = {matrix_from_json(need(j, "delta")), -1};
    return file;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write " + path);
    out << contents;
}

} // namespace surgtri
