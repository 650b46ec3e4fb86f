#pragma once

#include <vector>

#include "rvertex/rational.hpp"

namespace rvertex {

using Matrix = std::vector<std::vector<Rat>>;

/// Exact determinant. Laplace expansion for size <= 4, fraction-free Bareiss
/// elimination (over cleared denominators) beyond that. Singular matrices
/// return zero. Throws std::invalid_argument on a non-square input.
Rat det_exact(const Matrix& m);

}  // namespace rvertex
