#pragma once

#include "qs/rational.hpp"

#include <vector>

namespace qs {

// Dense row-major rational matrix; sizes here are tiny (<= 2 * loops).
using RatMat = std::vector<std::vector<Rat>>;

RatMat identity_matrix(int n);
RatMat zero_matrix(int rows, int cols);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat mat_sub(const RatMat& a, const RatMat& b);
bool mat_is_zero(const RatMat& a);
Rat determinant(RatMat a);

// Solve A X = B exactly; throws on singular A.
RatMat solve_linear(RatMat a, RatMat b);

} // namespace qs
