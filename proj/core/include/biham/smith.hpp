#pragma once

#include <biham/matrix.hpp>
#include <biham/upoly.hpp>

#include <vector>

namespace biham {

using PolyMatrix = std::vector<std::vector<UPoly>>;

// lambda*A + B as a matrix over Q[lambda].
PolyMatrix linear_pencil(const Matrix& a, const Matrix& b);

// Monic invariant factors s_1 | s_2 | ... of the nonzero part of the Smith form.
std::vector<UPoly> smith_invariant_factors(PolyMatrix m);

}  // namespace biham
