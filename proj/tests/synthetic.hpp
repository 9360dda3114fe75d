#pragma once

// Seeded generator of consistent surgery-triangle flow data: a short exact
// generator-level package (w1 inclusion, w0 projection) whose middle
// differential carries the mixed flows a^(0) -> a^(1) that define the
// connecting map.  Exactness of the resulting triangle is a theorem, so the
// checker is exercised on data where failures mean bugs, not bad luck.

#include <random>

#include "surgtri/floer.hpp"

namespace synthetic {

using surgtri::ChainMap;
using surgtri::GradedComplex;
using surgtri::IMat;
using surgtri::Int;
using surgtri::IVec;

struct SurgeryTriangleData {
    GradedComplex y1;
    GradedComplex y;
    std::vector<GradedComplex> y0;
    ChainMap w1, w0, delta;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(engine_() % std::uint64_t(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

// matching-style differential: sources drawn from one half of the
// generators, targets from the other, so it squares to zero by support
inline IMat random_matching_differential(Rng& rng, const std::vector<int>& degrees,
                                         std::vector<bool>& is_source,
                                         std::vector<bool>& is_target, bool allow_two) {
    const size_t n = degrees.size();
    IMat d(n, IVec(n, Int(0)));
    is_source.assign(n, false);
    is_target.assign(n, false);
    for (size_t s = 0; s < n; ++s) {
        if (rng.range(0, 2) == 0) continue;
        for (size_t t = 0; t < n; ++t) {
            if (t == s || is_source[t] || is_target[t] || is_source[s] || is_target[s]) continue;
            if (degrees[s] - degrees[t] != 1) continue;
            const long long coef = allow_two && rng.range(0, 3) == 0 ? 2 : 1;
            d[t][s] = Int(rng.range(0, 1) == 0 ? coef : -coef);
            is_source[s] = true;
            is_target[t] = true;
            break;
        }
    }
    return d;
}

inline SurgeryTriangleData random_surgery_triangle(std::uint64_t seed) {
    Rng rng(seed);
    SurgeryTriangleData data;

    const int r = static_cast<int>(rng.range(1, 4));
    const int pieces = static_cast<int>(rng.range(1, 2));

    std::vector<std::string> ids1;
    std::vector<int> deg1;
    for (int i = 0; i < r; ++i) {
        ids1.push_back("b" + std::to_string(i));
        deg1.push_back(static_cast<int>(rng.range(-2, 3)));
    }
    std::vector<bool> src1, tgt1;
    const IMat d1 = random_matching_differential(rng, deg1, src1, tgt1, true);
    data.y1 = surgtri::make_complex(ids1, deg1, 0, d1);

    std::vector<std::vector<bool>> src0s, tgt0s;
    for (int k = 0; k < pieces; ++k) {
        const int s = static_cast<int>(rng.range(1, 3));
        std::vector<std::string> ids;
        std::vector<int> deg;
        for (int i = 0; i < s; ++i) {
            ids.push_back("c" + std::to_string(k) + "_" + std::to_string(i));
            deg.push_back(static_cast<int>(rng.range(-2, 3)));
        }
        std::vector<bool> src, tgt;
        const IMat d0 = random_matching_differential(rng, deg, src, tgt, true);
        data.y0.push_back(surgtri::make_complex(ids, deg, 0, d0));
        src0s.push_back(src);
        tgt0s.push_back(tgt);
    }
    const GradedComplex sum0 = surgtri::direct_sum(data.y0);
    std::vector<bool> src0, tgt0;
    for (size_t k = 0; k < src0s.size(); ++k) {
        src0.insert(src0.end(), src0s[k].begin(), src0s[k].end());
        tgt0.insert(tgt0.end(), tgt0s[k].begin(), tgt0s[k].end());
    }

    // mixed flows: columns on untouched Y0 generators, rows on Y1
    // generators that are not sources, so d1.M = 0 and M.d0 = 0
    const size_t n1 = data.y1.size(), n0 = sum0.size();
    IMat mixed(n1, IVec(n0, Int(0)));
    for (size_t j = 0; j < n0; ++j) {
        if (src0[j] || tgt0[j]) continue;
        if (rng.range(0, 1) == 0) continue;
        for (size_t i = 0; i < n1; ++i) {
            if (src1[i]) continue;
            if (sum0.degrees[j] - data.y1.degrees[i] != 1) continue;
            mixed[i][j] = Int(rng.range(0, 1) == 0 ? 1 : -1);
            break;
        }
    }

    // middle complex: Y1 block, Y0 block, mixed flows in the corner
    std::vector<std::string> ids;
    std::vector<int> deg;
    for (size_t i = 0; i < n1; ++i) {
        ids.push_back("m." + data.y1.ids[i]);
        deg.push_back(data.y1.degrees[i]);
    }
    for (size_t j = 0; j < n0; ++j) {
        ids.push_back("m." + sum0.ids[j]);
        deg.push_back(sum0.degrees[j]);
    }
    IMat dy(n1 + n0, IVec(n1 + n0, Int(0)));
    for (size_t t = 0; t < n1; ++t)
        for (size_t s = 0; s < n1; ++s) dy[t][s] = data.y1.differential[t][s];
    for (size_t t = 0; t < n0; ++t)
        for (size_t s = 0; s < n0; ++s) dy[n1 + t][n1 + s] = sum0.differential[t][s];
    for (size_t t = 0; t < n1; ++t)
        for (size_t s = 0; s < n0; ++s) dy[t][n1 + s] = mixed[t][s];
    data.y = surgtri::make_complex(ids, deg, 0, dy);

    data.w1.matrix.assign(n1 + n0, IVec(n1, Int(0)));
    for (size_t i = 0; i < n1; ++i) data.w1.matrix[i][i] = 1;
    data.w0.matrix.assign(n0, IVec(n1 + n0, Int(0)));
    for (size_t j = 0; j < n0; ++j) data.w0.matrix[j][n1 + j] = 1;
    data.delta.matrix = mixed;
    data.delta.degree_shift = -1;
    return data;
}

} // namespace synthetic
