#ifndef TORICQ_LINALG_HPP
#define TORICQ_LINALG_HPP

#include <optional>
#include <vector>

#include "core/scalar.hpp"

namespace toricq {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

Scalar dot(const Vec& x, const Vec& y);

/// Solves the square system A x = b exactly; nullopt when A is singular.
std::optional<Vec> solve_square(Mat a, Vec b);

int rank(Mat a);

/// Basis of { x : A x = 0 } from the reduced row echelon form of A.
/// One vector per free column, with a 1 in that column; deterministic.
Mat nullspace(Mat a, int ncols);

}  // namespace toricq

#endif
