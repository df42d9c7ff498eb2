// Exact Gaussian elimination over the rationals.

#pragma once

#include "kstab/rational.hpp"

#include <optional>
#include <vector>

namespace kstab::linalg {

/// Row-major dense matrix.
using Matrix = std::vector<Vec>;

int rank(Matrix rows);

Rational determinant(Matrix rows);

/// Basis of { x : rows * x = 0 } for a matrix with `cols` columns.
std::vector<Vec> nullspace(const Matrix& rows, int cols);

/// Solves rows * x = rhs. Returns nullopt when the system is inconsistent or
/// when the solution is not unique.
std::optional<Vec> solve_unique(const Matrix& rows, const Vec& rhs);

/// Solves rows * x = rhs, returning some solution (free variables set to zero)
/// or nullopt if inconsistent.
std::optional<Vec> solve_any(const Matrix& rows, const Vec& rhs);

}  // namespace kstab::linalg
