#pragma once

#include <optional>
#include <vector>

#include "surgtri/rat.hpp"

namespace surgtri {

using IMat = std::vector<std::vector<Int>>;
using IVec = std::vector<Int>;

IMat identity_matrix(size_t n);
IMat matmul(const IMat& a, const IMat& b);
IVec matvec(const IMat& a, const IVec& x);
bool is_zero_matrix(const IMat& a);

/**
 * Smith normal form: unimodular U, V with U * M * V = D diagonal, each
 * invariant factor dividing the next.
 */
struct SmithResult {
    IMat U, D, V;
    size_t rank = 0;
    std::vector<Int> factors; // the nonzero diagonal entries, positive
};

SmithResult smith_normal_form(IMat M);

// columns spanning { x : M x = 0 } over Z
IMat kernel_basis(const IMat& M);

// integral solution of M x = b, if one exists
std::optional<IVec> solve_integer(const IMat& M, const IVec& b);

size_t integer_rank(const IMat& M);

} // namespace surgtri
