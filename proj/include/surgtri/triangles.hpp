#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surgtri/counting.hpp"

namespace surgtri {

enum class CobordismTag { W1, W0 };

/**
 * A generator of the synthetic chain groups: a transverse crossing of the
 * boundary curve with a reducible line (Y1 or Y0 side) or with the
 * perturbed Y-curve (middle complex).  Crossings on diagonal pieces of the
 * perturbed curve are the eps-deformations of Y1 generators, crossings on
 * wall pieces the deformations of Y0 generators; partition_check supplies
 * the pairing.
 */
struct Generator {
    Crossing at;
    std::string id;
    int degree = 0;
};

struct GeneratorSets {
    std::vector<Generator> y1;         // a_i^(1), on the Y1(m) line
    std::vector<Generator> yeps_diag;  // a_i^(1)(eps), diagonal crossings, aligned with y1
    std::vector<Generator> yeps_wall;  // a_j^(0)(eps), wall crossings, aligned with y0
    std::vector<Generator> y0;         // a_j^(0), on the Y0 lines
};

struct TriangleConfig {
    BoundaryCurve curve;
    int n = 1;
    int m = 0;
    int p = 0;
    Rat eps;
    Rat eta;
    int ambient = +1; // ambient orientation of the (u,v) plane; -1 mirrors all signs
};

// Generators from the partition matching; degrees all zero (assign with
// assign_degrees for graded filtering).
GeneratorSets enumerate_generators(const TriangleConfig& config);

enum class DegreeMode { AllZero, DistinctPerSector };
void assign_degrees(GeneratorSets& gens, DegreeMode mode);

/**
 * A holomorphic-triangle shadow: closed oriented contour
 * a_minus -> vartheta -> a_plus -> a_minus with the two line sides on the
 * cobordism's reducible lines (Y1 and the perturbed curve for W1, the
 * perturbed curve and Y0 for W0) and the third side an embedded sub-path of
 * the boundary curve.
 *
 * sign is the stored counting sign in the coherent-orientation model: the
 * product of the two generators' crossing orientations, times the ambient
 * orientation, with the W0 source-sector factor applied (wall-sector
 * sources +, diagonal-sector sources -; the two intersection regimes of the
 * perturbed curve glue with opposite relative orientations, which is what
 * makes the composite cobordism counts cancel).
 */
struct Triangle {
    TorusPoint a_minus, vartheta, a_plus;
    std::vector<TorusPoint> side_a;     // a_minus -> vartheta
    std::vector<TorusPoint> side_b;     // vartheta -> a_plus
    std::vector<TorusPoint> curve_side; // a_plus -> a_minus along the boundary curve
    int sign = 0;
    Rat area;                           // enclosed area, the energy proxy
    CobordismTag tag = CobordismTag::W1;
};

struct TriangleSet {
    std::vector<Triangle> triangles;
    std::string source_id, target_id;
    std::string diagnostic; // non-empty when constraints were unsatisfiable
};

// All inequivalent triangles from source to target (indices into the
// respective generator lists: W1 sources are y1, targets are yeps_diag or
// yeps_wall by target_wall; W0 sources are yeps_diag/yeps_wall by
// source_wall, targets are y0).
TriangleSet enumerate_triangles(const TriangleConfig& config, const GeneratorSets& gens,
                                CobordismTag tag, size_t source, size_t target,
                                bool sector_wall);

/**
 * Cobordism map matrices.  W1: rows are the middle-complex generators
 * (yeps_diag then yeps_wall), columns y1.  W0: rows y0, columns the middle
 * complex.  An entry is the signed count of minimal-area triangles when the
 * relative degree vanishes, zero otherwise.  Within-sector entries realize
 * the eps -> 0 degeneration: off-diagonal trajectory shadows die at minimal
 * energy, matched pairs count their sliver triangle.
 */
std::vector<std::vector<int>> w_matrix(const TriangleConfig& config, const GeneratorSets& gens,
                                       CobordismTag tag);

struct CancellationPair {
    size_t i, j;      // y1 index, y0 index
    int sign_w1, sign_w0;
};

struct CancellationReport {
    bool ok = false;
    bool product_zero = false;
    std::vector<CancellationPair> pairs;
    std::vector<std::string> unmatched;
    std::vector<std::vector<int>> w1, w0, product;
};

// The orientation-reversal certificate: a sign-reversing bijection between
// Xi_W1(a_i^(1), a_j^(0)(eps)) and Xi_W0(a_i^(1)(eps), a_j^(0)) for every
// generator pair, plus the matrix identity w0 . w1 = 0.
CancellationReport w1_w0_cancellation(const TriangleConfig& config);

// Delta on a cycle: x -> flow * x, rejecting non-cycles of the given
// boundary operator.
std::vector<Int> connecting_map(const std::vector<std::vector<Int>>& flow,
                                const std::vector<std::vector<Int>>& boundary_y0,
                                const std::vector<Int>& cycle);

} // namespace surgtri
