#pragma once

#include <vector>

#include "rvertex/lattice.hpp"
#include "rvertex/rational.hpp"

namespace rvertex {

/// Domain-wall partition function with reflecting end, M = N, x = (1..M),
/// via the closed-form determinant. The quadratic double-product numerator
/// is folded into the determinant rows so the value stays finite wherever
/// the partition function itself is.
/// Throws std::domain_error on a genuinely singular input (coinciding z or
/// w parameters).
Rat domain_wall_det(const ModelParams& p, const std::vector<Rat>& z,
                    const std::vector<Rat>& w);

/// Homogeneous limit (all w_j = 1) closed form. Requires additionally
/// a^2 != z_i^2, a^2 z_i^2 != 1, z_i^4 != 1.
Rat domain_wall_det_homogeneous(const ModelParams& p, const std::vector<Rat>& z);

}  // namespace rvertex
