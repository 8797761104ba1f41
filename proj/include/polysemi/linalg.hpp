#pragma once

#include <optional>
#include <vector>

#include "polysemi/numeric.hpp"

namespace polysemi {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row major

/// Gauss-Jordan over Q, in place. Returns the rank; pivot_cols, when given,
/// receives the pivot column of each nonzero row.
int row_reduce(QMat& m, std::vector<int>* pivot_cols = nullptr);

int rank(QMat m);

/// Exact solution of a x = b, nullopt when inconsistent. Free variables are
/// set to zero.
std::optional<QVec> solve(QMat a, const QVec& b);

/// Basis of {x : a x = 0}, one vector per row of the result.
QMat kernel(QMat a, int cols);

Rat determinant(QMat a);

/// Z-basis of {x in Z^n : a x = 0} for an integer matrix a (rows of length n).
/// Columns of the result form the basis; the basis is saturated because
/// kernels of integer matrices are.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& a, int n);

}  // namespace polysemi
