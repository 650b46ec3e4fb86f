#pragma once

#include <cstdint>
#include <vector>

#include "rvertex/rational.hpp"

namespace rvertex {

/// Extra nonsingularity constraints on top of the always-enforced core set.
enum SampleFlags : unsigned {
    kCore = 0,
    /// a^2 != z_i^{+-2} and a^2 z_i^2 != 1 (homogeneous determinant poles).
    kHomogeneousDet = 1u << 0,
    /// z_i^2 != a^2 and z_i^2 + z_i^-2 pairwise distinct (momentum map poles).
    kBetheMomenta = 1u << 1,
};

/// A generic evaluation point: couplings a, b, spectral parameters z_1..z_N
/// and inhomogeneities w_1..w_M, all exact nonzero rationals kept away from
/// every denominator locus of the identities under test.
struct SamplePoint {
    Rat a;
    Rat b;
    std::vector<Rat> z;
    std::vector<Rat> w;
    std::uint64_t seed = 0;
};

/// True iff the point avoids all singular loci selected by `flags`
/// (the core set is always checked).
bool satisfies_invariants(const SamplePoint& p, unsigned flags = kCore);

/// Deterministic rejection sampler. Numerators and denominators are drawn
/// from [-digit_bound, digit_bound]. Throws std::runtime_error after 10^6
/// rejections (widen digit_bound in that case).
SamplePoint sample_point(std::uint64_t seed, int M, int N, unsigned flags = kCore,
                         int digit_bound = 9);

/// Canonical one-line rendering used in verification reports.
std::string describe(const SamplePoint& p);

}  // namespace rvertex
