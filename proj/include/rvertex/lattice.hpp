#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rvertex/rational.hpp"

namespace rvertex {

/// Crossing parameter a and boundary parameter b.
/// Requires a != 0, a^4 != 1, b != 0, b^2 != 1.
struct ModelParams {
    Rat a;
    Rat b;
};

/// Strictly increasing occupied (or, for the dual, hole) positions in 1..M.
struct OccupationConfig {
    int M = 0;
    std::vector<int> x;

    bool valid() const;
};

/// Sparse state of the M-site quantum space. Bit j-1 of a mask set means
/// site j is in state |1>. Zero amplitudes are never stored.
struct FockVector {
    int M = 0;
    std::map<std::uint32_t, Rat> amp;
};

FockVector vacuum_state(int M);   // |0^M>
FockVector full_state(int M);     // |1^M>
FockVector basis_state(int M, std::uint32_t mask);

enum class RowOp { B, D };

/// Matrix element <aux_out|<q_out| L(z, w) |aux_in>|q_in>. Six entries are
/// nonzero; everything else (the ice-rule violations) returns zero.
Rat l_element(const ModelParams& p, const Rat& z, const Rat& w, int aux_in, int q_in,
              int aux_out, int q_out);

/// Boundary reflection element indexed by the dual-auxiliary output pair.
Rat k_element(const ModelParams& p, const Rat& z, std::pair<int, int> out_pair);

/// Applies the single-row monodromy element B(z|w) or D(z|w) to v.
FockVector apply_row_operator(RowOp kind, const ModelParams& p, const Rat& z,
                              const std::vector<Rat>& w, const FockVector& v);

/// Double-row creation operator via its B/D decomposition.
FockVector apply_double_row_b(const ModelParams& p, const Rat& z, const std::vector<Rat>& w,
                              const FockVector& v);

/// Literal two-row, two-auxiliary-space contraction of the same operator.
/// Slow; intended for cross-checking at small M.
FockVector apply_double_row_b_literal(const ModelParams& p, const Rat& z,
                                      const std::vector<Rat>& w, const FockVector& v);

/// <x_1..x_N| Bop(z_1) ... Bop(z_N) |0^M> by direct lattice contraction.
Rat wavefunction_oracle(const ModelParams& p, const std::vector<Rat>& z,
                        const std::vector<Rat>& w, const OccupationConfig& x);

/// <1^M| Bop(z_1) ... Bop(z_N) |xbar_1..xbar_N> where the ket has holes at
/// the xbar positions.
Rat dual_wavefunction_oracle(const ModelParams& p, const std::vector<Rat>& z,
                             const std::vector<Rat>& w, const OccupationConfig& xbar);

}  // namespace rvertex
