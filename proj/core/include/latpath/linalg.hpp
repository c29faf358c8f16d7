#pragma once

#include <optional>

#include "latpath/rational.hpp"

// Dense exact linear algebra over Q, sized for desk-scale systems
// (dimensions <= 8, a few dozen rows). Plain Gaussian elimination with
// first-nonzero pivots; exact arithmetic needs no pivot-size strategy.

namespace latpath {

using QMat = std::vector<QVec>;

int rank(QMat m);

/// Reduced row echelon form. Optionally reports pivot column indices.
QMat rref(QMat m, std::vector<int>* pivot_cols = nullptr);

/// Solve the square system a*x = b; nullopt when a is singular.
std::optional<QVec> solve_square(QMat a, QVec b);

Rat det(QMat a);

/// Canonical basis of the null space {x : m*x = 0}, from the RREF free
/// columns. `ncols` disambiguates the empty-matrix case.
QMat kernel_basis(const QMat& m, int ncols);

}  // namespace latpath
