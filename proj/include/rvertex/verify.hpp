#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rvertex/lattice.hpp"
#include "rvertex/rational.hpp"
#include "rvertex/report.hpp"

namespace rvertex {

/// Which of the polynomial-characterization properties to run.
enum PropertyFlags : unsigned {
    kDegree = 1u << 0,
    kSymmetry = 1u << 1,
    kInversion = 1u << 2,
    kRecursionTop = 1u << 3,
    kFactorization = 1u << 4,
    kInitial = 1u << 5,
    kAllProperties = (1u << 6) - 1,
};

/// Summation identity behind the one-particle closed form: both displayed
/// sides evaluated and compared. w_prefix must cover columns 1..x1-1.
VerificationReport check_lemma_identity(const ModelParams& p, const Rat& z,
                                        const std::vector<Rat>& w_prefix, int x1,
                                        std::uint64_t seed = 0,
                                        Mutation mutation = Mutation::kNone);

/// Lattice oracle against the closed-form symmetric function (dual pair when
/// `dual` is set).
VerificationReport check_theorem_5_2(const ModelParams& p, const std::vector<Rat>& z,
                                     const std::vector<Rat>& w, const OccupationConfig& x,
                                     bool dual, std::uint64_t seed = 0,
                                     Mutation mutation = Mutation::kNone);

/// The five characterization properties (degree bound, z-symmetry, inversion
/// ratio, top recursion / factorization, one-particle initial condition),
/// run directly on the lattice oracle.
std::vector<VerificationReport> check_properties(const ModelParams& p,
                                                 const std::vector<Rat>& z,
                                                 const std::vector<Rat>& w,
                                                 const OccupationConfig& x, unsigned which,
                                                 bool dual, std::uint64_t seed = 0,
                                                 Mutation mutation = Mutation::kNone);

/// Cauchy-type pairing: the C(M, N)-term sum of dual times primal symmetric
/// functions over complementary configurations against the domain-wall
/// determinant (homogeneous variant uses all w_j = 1 and the homogeneous
/// closed form).
VerificationReport check_pairing(const ModelParams& p, const std::vector<Rat>& z,
                                 const std::vector<Rat>& w, int N, bool homogeneous,
                                 std::uint64_t seed = 0, Mutation mutation = Mutation::kNone);

enum CheckFlags : unsigned {
    kLemma = 1u << 0,
    kTheorem52 = 1u << 1,
    kProperties = 1u << 2,
    kPairing = 1u << 3,
    kBethe = 1u << 4,
    kAllChecks = (1u << 5) - 1,
};

/// Samples one admissible point per (M, N, check) and runs the selected
/// checkers. Deterministic in `seed`; report order follows input order.
std::vector<VerificationReport> run_suite(std::uint64_t seed,
                                          const std::vector<std::pair<int, int>>& sizes,
                                          unsigned checks = kAllChecks);

}  // namespace rvertex
