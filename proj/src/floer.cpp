#include "surgtri/floer.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <boost/multiprecision/cpp_int.hpp>

namespace surgtri {

namespace {

int mod_degree(int d, int modulus) {
    if (modulus == 0) return d;
    int r = d % modulus;
    if (r < 0) r += modulus;
    return r;
}

IMat shaped(IMat m, size_t rows, size_t cols) {
    m.resize(rows);
    for (auto& row : m) row.resize(cols, Int(0));
    return m;
}

} // namespace

GradedComplex make_complex(std::vector<std::string> ids, std::vector<int> degrees, int modulus,
                           IMat differential) {
    if (ids.size() != degrees.size())
        throw precondition_error("make_complex: ids and degrees disagree");
    if (modulus < 0 || modulus % 2 != 0)
        throw precondition_error("make_complex: grading modulus must be 0 or even positive");
    const size_t n = ids.size();
    differential = shaped(std::move(differential), n, n);
    for (size_t t = 0; t < n; ++t)
        for (size_t s = 0; s < n; ++s) {
            if (differential[t][s] == 0) continue;
            const int drop = degrees[s] - degrees[t] - 1;
            if (mod_degree(drop, modulus) != 0)
                throw integrity_error("make_complex: differential entry " + ids[t] + " <- " +
                                      ids[s] + " does not drop degree by one");
        }
    if (!is_zero_matrix(matmul(differential, differential)))
        throw integrity_error("make_complex: differential does not square to zero");
    GradedComplex out;
    out.ids = std::move(ids);
    out.degrees = std::move(degrees);
    out.modulus = modulus;
    out.differential = std::move(differential);
    return out;
}

GradedComplex direct_sum(const std::vector<GradedComplex>& parts) {
    GradedComplex out;
    out.modulus = parts.empty() ? 0 : parts.front().modulus;
    size_t total = 0;
    for (const auto& part : parts) {
        if (part.modulus != out.modulus)
            throw precondition_error("direct_sum: mixed grading moduli");
        total += part.size();
    }
    out.differential = shaped({}, total, total);
    size_t offset = 0;
    for (size_t k = 0; k < parts.size(); ++k) {
        const auto& part = parts[k];
        for (size_t i = 0; i < part.size(); ++i) {
            out.ids.push_back(parts.size() > 1 ? "k" + std::to_string(k) + "." + part.ids[i]
                                               : part.ids[i]);
            out.degrees.push_back(part.degrees[i]);
        }
        for (size_t t = 0; t < part.size(); ++t)
            for (size_t s = 0; s < part.size(); ++s)
                out.differential[offset + t][offset + s] = part.differential[t][s];
        offset += part.size();
    }
    return out;
}

bool is_chain_map(const GradedComplex& source, const GradedComplex& target, const ChainMap& map,
                  int sign) {
    const IMat m = shaped(map.matrix, target.size(), source.size());
    // degree compatibility modulo the common period
    const int g = std::gcd(source.modulus, target.modulus);
    for (size_t t = 0; t < target.size(); ++t)
        for (size_t s = 0; s < source.size(); ++s) {
            if (m[t][s] == 0) continue;
            if (mod_degree(target.degrees[t] - source.degrees[s] - map.degree_shift, g) != 0)
                return false;
        }
    IMat lhs = matmul(m, source.differential);
    const IMat rhs = matmul(target.differential, m);
    for (size_t i = 0; i < lhs.size(); ++i)
        for (size_t j = 0; j < lhs[i].size(); ++j)
            if (lhs[i][j] != Int(sign) * rhs[i][j]) return false;
    return true;
}

SpincFamily enumerate_spinc(BaseManifold base, int n, const Int& p, const Int& q) {
    if (n < 1) throw precondition_error("enumerate_spinc: n must be positive");
    SpincFamily fam;
    fam.base = base;
    fam.n = n;
    switch (base) {
        case BaseManifold::Y:
        case BaseManifold::Y1:
            fam.shape = FamilyShape::Cyclic;
            fam.order = n;
            for (int k = 0; k < n; ++k) fam.labels.push_back(k);
            break;
        case BaseManifold::Y0:
            fam.shape = FamilyShape::Integers;
            fam.order = 0;
            break;
        case BaseManifold::Ypq: {
            if (p < 1) throw precondition_error("enumerate_spinc: p must be >= 1");
            if (boost::multiprecision::gcd(boost::multiprecision::abs(p),
                                           boost::multiprecision::abs(q)) != 1)
                throw precondition_error("enumerate_spinc: p and q must be coprime");
            fam.shape = FamilyShape::Cyclic;
            fam.order = Int(n) * p;
            for (Int k = 0; k < fam.order; ++k) fam.labels.push_back(k);
            break;
        }
    }
    return fam;
}

Int grading_modulus(const Int& two_ell, const Int& k) {
    if (two_ell < 0 || two_ell % 2 != 0)
        throw precondition_error("grading_modulus: 2l must be even and >= 0");
    return boost::multiprecision::gcd(two_ell, 2 * boost::multiprecision::abs(k));
}

GradedComplex lift_grading(const GradedComplex& complex, int target_modulus) {
    const int native = complex.modulus;
    if (target_modulus != 0) {
        if (target_modulus < 0 || target_modulus % 2 != 0)
            throw precondition_error("lift_grading: target modulus must be 0 or even positive");
        if (native != 0 && target_modulus % native != 0)
            throw precondition_error(
                "lift_grading: target modulus must be a multiple of the native one");
    }

    const size_t n = complex.size();
    std::vector<int> lift(n, 0);
    std::vector<int> comp(n, -1);
    int components = 0;
    for (size_t start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        comp[start] = components;
        std::queue<size_t> queue;
        queue.push(start);
        while (!queue.empty()) {
            const size_t at = queue.front();
            queue.pop();
            for (size_t other = 0; other < n; ++other) {
                // flow other -> at drops one; flow at -> other likewise
                const bool down = complex.differential[at][other] != 0;  // other is source
                const bool up = complex.differential[other][at] != 0;
                if (!down && !up) continue;
                const int expect = down ? lift[at] + 1 : lift[at] - 1;
                if (down && up)
                    throw integrity_error("lift_grading: two-sided flow between generators");
                if (comp[other] == -1) {
                    comp[other] = components;
                    lift[other] = expect;
                    queue.push(other);
                } else if (lift[other] != expect) {
                    throw integrity_error(
                        "lift_grading: flow cycle with inconsistent degree drop");
                }
            }
        }
        ++components;
    }
    // normalize each component so its minimal degree is zero
    std::vector<int> min_of(size_t(components), 0);
    std::vector<bool> seen(size_t(components), false);
    for (size_t i = 0; i < n; ++i) {
        if (!seen[comp[i]] || lift[i] < min_of[comp[i]]) {
            min_of[comp[i]] = lift[i];
            seen[comp[i]] = true;
        }
    }
    std::vector<int> degrees(n);
    for (size_t i = 0; i < n; ++i)
        degrees[i] = mod_degree(lift[i] - min_of[comp[i]], target_modulus);
    return make_complex(complex.ids, degrees, target_modulus, complex.differential);
}

int wall_crossing_shift(int path_flow) { return path_flow; }

std::vector<HomologySummary> homology(const GradedComplex& complex) {
    const int modulus = complex.modulus;
    std::map<int, std::vector<size_t>> by_degree;
    for (size_t i = 0; i < complex.size(); ++i)
        by_degree[mod_degree(complex.degrees[i], modulus)].push_back(i);

    const auto block = [&](int from_deg) -> IMat {
        // differential restricted to sources of degree from_deg
        const auto sit = by_degree.find(mod_degree(from_deg, modulus));
        if (sit == by_degree.end()) return {};
        const auto tit = by_degree.find(mod_degree(from_deg - 1, modulus));
        const std::vector<size_t> empty;
        const auto& targets = (tit == by_degree.end()) ? empty : tit->second;
        IMat m(targets.size(), IVec(sit->second.size(), Int(0)));
        for (size_t t = 0; t < targets.size(); ++t)
            for (size_t s = 0; s < sit->second.size(); ++s)
                m[t][s] = complex.differential[targets[t]][sit->second[s]];
        return m;
    };

    std::vector<HomologySummary> out;
    for (const auto& [deg, gens] : by_degree) {
        const IMat d_here = block(deg);
        const IMat d_above = block(deg + 1);

        IMat kernel;
        if (d_here.empty() || d_here[0].empty())
            kernel = identity_matrix(gens.size());
        else
            kernel = kernel_basis(d_here);
        const size_t kdim = kernel.empty() ? 0 : kernel[0].size();

        HomologySummary summary;
        summary.degree = deg;
        if (d_above.empty() || d_above[0].empty()) {
            summary.betti = kdim;
        } else {
            // express boundaries in kernel coordinates and reduce
            IMat X(kdim, IVec(d_above[0].size(), Int(0)));
            for (size_t j = 0; j < d_above[0].size(); ++j) {
                IVec col(gens.size());
                for (size_t i = 0; i < gens.size(); ++i) col[i] = d_above[i][j];
                const auto sol = solve_integer(kernel, col);
                if (!sol)
                    throw integrity_error("homology: boundary outside cycle lattice");
                for (size_t i = 0; i < kdim; ++i) X[i][j] = (*sol)[i];
            }
            const auto snf = smith_normal_form(X);
            summary.betti = kdim - snf.rank;
            for (const auto& f : snf.factors)
                if (f > 1) summary.torsion.push_back(f);
        }
        if (summary.betti > 0 || !summary.torsion.empty()) out.push_back(std::move(summary));
    }
    return out;
}

namespace {

// middle-homology exactness of  A --f--> B --g--> C  at B (degree shifts
// are irrelevant for the lattice computations)
bool node_exact(const GradedComplex& A, const GradedComplex& B, const GradedComplex& C,
                const IMat& f, const IMat& g, std::string node,
                std::vector<std::string>& failures) {
    const size_t an = A.size(), bn = B.size(), cn = C.size();
    const IMat F = shaped(f, bn, an);
    const IMat G = shaped(g, cn, bn);

    bool ok = true;
    // composite vanishes on homology: g(f(cycle)) must be a boundary
    const IMat ker_a = (an == 0) ? IMat{} : kernel_basis(shaped(A.differential, an, an));
    const size_t ka = ker_a.empty() ? 0 : ker_a[0].size();
    for (size_t j = 0; j < ka; ++j) {
        IVec a(an);
        for (size_t i = 0; i < an; ++i) a[i] = ker_a[i][j];
        const IVec gfa = matvec(G, matvec(F, a));
        if (!solve_integer(shaped(C.differential, cn, cn), gfa)) {
            failures.push_back(node + ": composite map is nonzero on homology");
            ok = false;
        }
    }

    // ker(g_*) <= im(f_*): every cycle b with g(b) a boundary must be
    // f(cycle) + boundary.  Generators of that lattice come from projecting
    // the kernel of the stacked system [d_B 0; g -d_C].
    IMat stacked(bn + cn, IVec(bn + cn, Int(0)));
    for (size_t i = 0; i < bn; ++i)
        for (size_t j = 0; j < bn; ++j) stacked[i][j] = B.differential[i][j];
    for (size_t i = 0; i < cn; ++i)
        for (size_t j = 0; j < bn; ++j) stacked[bn + i][j] = G[i][j];
    for (size_t i = 0; i < cn; ++i)
        for (size_t j = 0; j < cn; ++j) stacked[bn + i][bn + j] = -C.differential[i][j];
    const IMat ker_stacked = kernel_basis(stacked);
    const size_t ks = ker_stacked.empty() ? 0 : ker_stacked[0].size();

    // solution matrix [ f * ker(d_A) | d_B ]
    IMat span(bn, IVec(ka + bn, Int(0)));
    for (size_t j = 0; j < ka; ++j) {
        IVec a(an);
        for (size_t i = 0; i < an; ++i) a[i] = ker_a[i][j];
        const IVec fa = matvec(F, a);
        for (size_t i = 0; i < bn; ++i) span[i][j] = fa[i];
    }
    for (size_t i = 0; i < bn; ++i)
        for (size_t j = 0; j < bn; ++j) span[i][ka + j] = B.differential[i][j];

    for (size_t j = 0; j < ks; ++j) {
        IVec b(bn);
        for (size_t i = 0; i < bn; ++i) b[i] = ker_stacked[i][j];
        if (!solve_integer(span, b)) {
            failures.push_back(node + ": kernel class not in the image");
            ok = false;
            break;
        }
    }
    return ok;
}

} // namespace

ExactnessReport exact_triangle_check(const GradedComplex& c_y1, const GradedComplex& c_y,
                                     const std::vector<GradedComplex>& c_y0_list,
                                     const ChainMap& w1, const ChainMap& w0,
                                     const ChainMap& delta) {
    ExactnessReport report;
    const GradedComplex sum0 = direct_sum(c_y0_list);
    const size_t n1 = c_y1.size(), ny = c_y.size(), n0 = sum0.size();

    report.chain_maps_ok = true;
    if (!is_chain_map(c_y1, c_y, w1, +1)) {
        report.chain_maps_ok = false;
        report.failures.push_back("w1 is not a chain map");
    }
    if (!is_chain_map(c_y, sum0, w0, +1)) {
        report.chain_maps_ok = false;
        report.failures.push_back("w0 is not a chain map");
    }
    if (!is_chain_map(sum0, c_y1, delta, -1)) {
        report.chain_maps_ok = false;
        report.failures.push_back("delta does not anticommute with the differentials");
    }

    const IMat W1 = shaped(w1.matrix, ny, n1);
    const IMat W0 = shaped(w0.matrix, n0, ny);
    const IMat D = shaped(delta.matrix, n1, n0);

    // generator-level short exactness
    report.generator_level_exact = true;
    if (integer_rank(W1) != n1) {
        report.generator_level_exact = false;
        report.failures.push_back("w1 is not injective on generators");
    }
    {
        const auto snf = smith_normal_form(W0);
        bool onto = (snf.rank == n0);
        for (const auto& f : snf.factors)
            if (f != 1) onto = false;
        if (!onto) {
            report.generator_level_exact = false;
            report.failures.push_back("w0 is not surjective over Z");
        }
    }
    if (!is_zero_matrix(matmul(W0, W1))) {
        report.generator_level_exact = false;
        report.failures.push_back("w0 . w1 != 0");
    } else {
        const IMat ker_w0 = kernel_basis(W0);
        const size_t kw = ker_w0.empty() ? 0 : ker_w0[0].size();
        for (size_t j = 0; j < kw; ++j) {
            IVec b(ny);
            for (size_t i = 0; i < ny; ++i) b[i] = ker_w0[i][j];
            if (!solve_integer(W1, b)) {
                report.generator_level_exact = false;
                report.failures.push_back("ker(w0) exceeds im(w1) on generators");
                break;
            }
        }
    }

    report.exact_at_y = node_exact(c_y1, c_y, sum0, W1, W0, "node H(Y)", report.failures);
    report.exact_at_y0 = node_exact(c_y, sum0, c_y1, W0, D, "node H(Y0)", report.failures);
    report.exact_at_y1 = node_exact(sum0, c_y1, c_y, D, W1, "node H(Y1)", report.failures);

    // snake oracle: lift each homology generator of sum0 through w0, apply
    // the middle differential, pull back through w1, compare with delta
    report.snake_agrees = true;
    const IMat ker0 = (n0 == 0) ? IMat{} : kernel_basis(shaped(sum0.differential, n0, n0));
    const size_t kz = ker0.empty() ? 0 : ker0[0].size();
    for (size_t j = 0; j < kz; ++j) {
        IVec z(n0);
        for (size_t i = 0; i < n0; ++i) z[i] = ker0[i][j];
        const auto y = solve_integer(W0, z);
        if (!y) {
            report.snake_agrees = false;
            report.failures.push_back("snake: cycle has no w0 preimage");
            continue;
        }
        const IVec dy = matvec(shaped(c_y.differential, ny, ny), *y);
        const auto x = solve_integer(W1, dy);
        if (!x) {
            report.snake_agrees = false;
            report.failures.push_back("snake: boundary of the lift misses im(w1)");
            continue;
        }
        IVec diff(n1);
        const IVec dz = matvec(D, z);
        for (size_t i = 0; i < n1; ++i) diff[i] = (*x)[i] - dz[i];
        if (!solve_integer(shaped(c_y1.differential, n1, n1), diff)) {
            report.snake_agrees = false;
            report.failures.push_back("snake: connecting map differs from the snake image");
        }
    }
    return report;
}

} // namespace surgtri
