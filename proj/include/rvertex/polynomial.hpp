#pragma once

#include <utility>
#include <vector>

#include "rvertex/rational.hpp"

namespace rvertex {

/// Exact Lagrange interpolation through the given (abscissa, value) samples.
/// Returns power-basis coefficients, lowest degree first, trailing zeros
/// trimmed (the zero polynomial yields an empty vector).
/// Throws std::invalid_argument on duplicate abscissae or empty input.
std::vector<Rat> interpolate_univariate(const std::vector<std::pair<Rat, Rat>>& samples);

/// Horner evaluation of a coefficient sequence (lowest degree first).
Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& t);

}  // namespace rvertex
