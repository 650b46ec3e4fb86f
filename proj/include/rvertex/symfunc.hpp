#pragma once

#include <vector>

#include "rvertex/lattice.hpp"
#include "rvertex/rational.hpp"

namespace rvertex {

/// Closed-form symmetric function for the wavefunction: explicit sum over
/// all permutations of z_1..z_N and all sign choices of their exponents.
/// Throws std::domain_error when the input sits on a denominator locus
/// (z_j^4 == 1 or a coinciding-z degeneracy).
Rat eval_F(const ModelParams& p, const std::vector<Rat>& z, const std::vector<Rat>& w,
           const OccupationConfig& x);

/// Dual variant (hole configuration xbar).
Rat eval_F_bar(const ModelParams& p, const std::vector<Rat>& z, const std::vector<Rat>& w,
               const OccupationConfig& xbar);

/// N=1 closed form of the wavefunction (the two-term exponent-sign sum).
Rat wavefunction_n1(const ModelParams& p, const Rat& z, const std::vector<Rat>& w, int x1);

/// N=1 closed form of the dual wavefunction.
Rat dual_wavefunction_n1(const ModelParams& p, const Rat& z, const std::vector<Rat>& w, int x1);

}  // namespace rvertex
