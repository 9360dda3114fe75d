#pragma once

#include "surgtri/io.hpp"

namespace surgtri {

/**
 * Deterministic SVG 1.1 picture of a configuration: fundamental-domain
 * grid, the three reducible-line families, the perturbed Y-curve, the
 * boundary curve with endpoint markers, theta points when a surgery slope
 * is present, and the minimal holomorphic-triangle contours shaded by sign.
 * 40 user units per holonomy unit; output is byte-identical for identical
 * input (no timestamps, fixed ordering and formatting).
 */
std::string render_svg(const CurveFile& file);

} // namespace surgtri
