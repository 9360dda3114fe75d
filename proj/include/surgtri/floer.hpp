#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surgtri/snf.hpp"

namespace surgtri {

/**
 * Integer chain complex with a Z- or Z_{2l}-valued grading.  The
 * differential is stored as a full matrix, entry [target][source], drops
 * degree by one (mod the modulus) and squares to zero; both are enforced
 * at construction.
 */
struct GradedComplex {
    std::vector<std::string> ids;
    std::vector<int> degrees;
    int modulus = 0; // 0 means Z-graded, otherwise the even period 2l
    IMat differential;

    size_t size() const { return ids.size(); }
};

GradedComplex make_complex(std::vector<std::string> ids, std::vector<int> degrees, int modulus,
                           IMat differential);

// direct sum, concatenating generators in order
GradedComplex direct_sum(const std::vector<GradedComplex>& parts);

struct ChainMap {
    IMat matrix; // [target generator][source generator]
    int degree_shift = 0;
};

// matrix . d_source = sign * d_target . matrix with the degree bookkeeping;
// sign = -1 checks the anticommuting convention used by odd-degree maps
bool is_chain_map(const GradedComplex& source, const GradedComplex& target, const ChainMap& map,
                  int sign = +1);

// ---------------------------------------------------------------------------
// spin-c families

enum class BaseManifold { Y, Y1, Y0, Ypq };
enum class FamilyShape { Cyclic, Integers };

struct SpincFamily {
    BaseManifold base = BaseManifold::Y;
    int n = 1;
    FamilyShape shape = FamilyShape::Cyclic;
    Int order = 0;            // cardinality for Cyclic, 0 for Integers
    std::vector<Int> labels;  // Euler-class multiples k for Cyclic families
};

SpincFamily enumerate_spinc(BaseManifold base, int n, const Int& p = 1, const Int& q = 0);

// gcd(2l, 2k), with gcd(x, 0) = x; 0 means Z-graded
Int grading_modulus(const Int& two_ell, const Int& k);

/**
 * Relative grading lifted from the flow data: each nonzero differential
 * entry forces deg(source) = deg(target) + 1 over Z.  The lift is unique
 * per connected flow component up to a shift, normalized so the designated
 * base generator (the one of minimal lifted degree, lowest index on ties)
 * sits in degree 0.  Inconsistent flow cycles raise integrity_error.
 */
GradedComplex lift_grading(const GradedComplex& complex, int target_modulus);

// the index shift applied when re-basing gradings between sigma (x) L_0 and
// sigma (x) L_m is the complex spectral flow along the reducible path
int wall_crossing_shift(int path_flow);

struct HomologySummary {
    int degree = 0;
    size_t betti = 0;
    std::vector<Int> torsion;
};

// integer homology per degree class, via Smith reduction of the degree
// blocks of the differential
std::vector<HomologySummary> homology(const GradedComplex& complex);

struct ExactnessReport {
    bool chain_maps_ok = false;
    bool generator_level_exact = false; // rank(w1) full, w0 onto, im w1 = ker w0
    bool exact_at_y1 = false;
    bool exact_at_y = false;
    bool exact_at_y0 = false;
    bool snake_agrees = false;
    std::vector<std::string> failures;

    bool all_ok() const {
        return chain_maps_ok && generator_level_exact && exact_at_y1 && exact_at_y &&
               exact_at_y0 && snake_agrees;
    }
};

/**
 * Verifies the surgery triangle package: the generator-level short exact
 * sequence 0 -> C(Y1) -> C(Y) -> sum_k C(Y0,k) -> 0, homology exactness at
 * the three nodes of the triangle, and agreement of the supplied connecting
 * map with the snake construction (lift through w0, apply the boundary,
 * pull back through w1) on every homology generator.
 */
ExactnessReport exact_triangle_check(const GradedComplex& c_y1, const GradedComplex& c_y,
                                     const std::vector<GradedComplex>& c_y0_list,
                                     const ChainMap& w1, const ChainMap& w0,
                                     const ChainMap& delta);

} // namespace surgtri
