#pragma once

#include <vector>

#include "rvertex/lattice.hpp"
#include "rvertex/rational.hpp"
#include "rvertex/report.hpp"

namespace rvertex {

/// Open-chain parametrization: multiplicative momenta X_l (standing in for
/// e^{iK_l}), anisotropy Delta and boundary coupling pprime, all exact.
/// Momentum negation K -> -K is realized as X -> 1/X.
struct BetheParams {
    std::vector<Rat> X;
    Rat Delta;
    Rat pprime;
    int M = 0;
};

/// X_l = (a z_l - a^-1 z_l^-1) / (a z_l^-1 - a^-1 z_l), Delta = -(a^2+a^-2)/2,
/// pprime = -(b+b^-1)(a^2-a^-2) / (2(b-b^-1)).
/// Throws std::domain_error when z_l^2 == a^2 (vanishing denominator).
BetheParams momenta_from_spectral(const ModelParams& p, const std::vector<Rat>& z, int M);

/// Plane-wave sum over all permutations and negations of the momenta with
/// alternating sign.
Rat eval_f(const BetheParams& bp, const OccupationConfig& x);

/// Compares eval_F at w = (1,...,1) against the prefactor times eval_f.
VerificationReport check_coordinate_relation(const ModelParams& p, const std::vector<Rat>& z,
                                             int M, const OccupationConfig& x,
                                             std::uint64_t seed = 0,
                                             Mutation mutation = Mutation::kNone);

}  // namespace rvertex
