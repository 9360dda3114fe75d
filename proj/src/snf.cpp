#include "surgtri/snf.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace surgtri {

IMat identity_matrix(size_t n) {
    IMat I(n, IVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IMat matmul(const IMat& a, const IMat& b) {
    if (a.empty() || b.empty()) return {};
    IMat out(a.size(), IVec(b[0].size(), Int(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IVec matvec(const IMat& a, const IVec& x) {
    IVec out(a.size(), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    return out;
}

bool is_zero_matrix(const IMat& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

SmithResult smith_normal_form(IMat M) {
    const size_t rows = M.size();
    const size_t cols = rows ? M[0].size() : 0;
    SmithResult res;
    res.U = identity_matrix(rows);
    res.V = identity_matrix(cols);

    const auto swap_rows = [&](size_t a, size_t b) {
        std::swap(M[a], M[b]);
        std::swap(res.U[a], res.U[b]);
    };
    const auto swap_cols = [&](size_t a, size_t b) {
        for (auto& row : M) std::swap(row[a], row[b]);
        for (auto& row : res.V) std::swap(row[a], row[b]);
    };
    const auto add_row = [&](size_t dst, size_t src, const Int& f) {
        for (size_t j = 0; j < cols; ++j) M[dst][j] += f * M[src][j];
        for (size_t j = 0; j < rows; ++j) res.U[dst][j] += f * res.U[src][j];
    };
    const auto add_col = [&](size_t dst, size_t src, const Int& f) {
        for (size_t i = 0; i < rows; ++i) M[i][dst] += f * M[i][src];
        for (size_t i = 0; i < cols; ++i) res.V[i][dst] += f * res.V[i][src];
    };
    const auto negate_row = [&](size_t r) {
        for (auto& v : M[r]) v = -v;
        for (auto& v : res.U[r]) v = -v;
    };

    size_t s = 0;
    while (s < rows && s < cols) {
        // locate the minimal nonzero entry in the lower-right block
        size_t pi = s, pj = s;
        Int best = 0;
        for (size_t i = s; i < rows; ++i)
            for (size_t j = s; j < cols; ++j) {
                const Int a = boost::multiprecision::abs(M[i][j]);
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        swap_rows(s, pi);
        swap_cols(s, pj);
        if (M[s][s] < 0) negate_row(s);

        bool clean = true;
        for (size_t i = s + 1; i < rows; ++i) {
            if (M[i][s] == 0) continue;
            const Int f = -(M[i][s] / M[s][s]);
            add_row(i, s, f);
            if (M[i][s] != 0) clean = false;
        }
        for (size_t j = s + 1; j < cols; ++j) {
            if (M[s][j] == 0) continue;
            const Int f = -(M[s][j] / M[s][s]);
            add_col(j, s, f);
            if (M[s][j] != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders appeared; repeat the pivot hunt

        // divisibility: fold in any entry the pivot does not divide
        bool divides = true;
        for (size_t i = s + 1; i < rows && divides; ++i)
            for (size_t j = s + 1; j < cols && divides; ++j)
                if (M[i][j] % M[s][s] != 0) {
                    add_row(s, i, Int(1));
                    divides = false;
                }
        if (!divides) continue;
        ++s;
    }

    res.D = M;
    res.rank = s;
    for (size_t i = 0; i < s; ++i) res.factors.push_back(M[i][i]);
    return res;
}

IMat kernel_basis(const IMat& M) {
    if (M.empty() || M[0].empty()) {
        // zero map: the whole domain is the kernel
        const size_t cols = M.empty() ? 0 : M[0].size();
        return identity_matrix(cols);
    }
    const auto snf = smith_normal_form(M);
    const size_t cols = M[0].size();
    IMat basis(cols, IVec(cols - snf.rank, Int(0)));
    for (size_t j = snf.rank; j < cols; ++j)
        for (size_t i = 0; i < cols; ++i) basis[i][j - snf.rank] = snf.V[i][j];
    return basis;
}

std::optional<IVec> solve_integer(const IMat& M, const IVec& b) {
    if (M.empty()) {
        for (const auto& v : b)
            if (v != 0) return std::nullopt;
        return IVec{};
    }
    const size_t cols = M[0].size();
    const auto snf = smith_normal_form(M);
    const IVec ub = matvec(snf.U, b);
    IVec y(cols, Int(0));
    for (size_t i = 0; i < ub.size(); ++i) {
        if (i < snf.rank) {
            if (ub[i] % snf.D[i][i] != 0) return std::nullopt;
            y[i] = ub[i] / snf.D[i][i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return matvec(snf.V, y);
}

size_t integer_rank(const IMat& M) {
    if (M.empty() || M[0].empty()) return 0;
    return smith_normal_form(M).rank;
}

} // namespace surgtri
