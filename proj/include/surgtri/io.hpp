#pragma once

#include <optional>
#include <string>

#include "surgtri/floer.hpp"
#include "surgtri/invariants.hpp"
#include "surgtri/triangles.hpp"

namespace surgtri {

// Structured-text problem files: UTF-8 JSON with a format_version field and
// a kind tag; rationals travel as "num/den" strings so nothing ever rounds.
inline constexpr const char* kFormatVersion = "1";

struct CurveFile {
    TriangleConfig config;                    // curve + (n, m, p, eps, eta)
    std::optional<std::pair<Int, Int>> surgery; // p/q for the counting identity
    // optional expected counts for fixture verification
    std::optional<int> expected_count_y;
    std::optional<int> expected_count_y1;
    std::optional<int> expected_count_y0_total;
};

struct ComplexFile {
    GradedComplex y1, y;
    std::vector<GradedComplex> y0;
    ChainMap w1, w0, delta;
};

std::string serialize_surgery(const SurgeryProblem& problem);
SurgeryProblem parse_surgery(const std::string& text);

std::string serialize_curve(const CurveFile& file);
CurveFile parse_curve(const std::string& text);

std::string serialize_complex(const ComplexFile& file);
ComplexFile parse_complex(const std::string& text);

// triangle-config files share the curve schema with kind "triangle-config"
std::string serialize_triangle_config(const CurveFile& file);
CurveFile parse_triangle_config(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace surgtri
