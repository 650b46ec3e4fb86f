#include "rvertex/lattice.hpp"

#include <stdexcept>

namespace rvertex {

bool OccupationConfig::valid() const {
    if (M < 1 || static_cast<int>(x.size()) > M) return false;
    int prev = 0;
    for (int xi : x) {
        if (xi <= prev || xi > M) return false;
        prev = xi;
    }
    return true;
}

FockVector vacuum_state(int M) { return basis_state(M, 0); }

FockVector full_state(int M) { return basis_state(M, (1u << M) - 1u); }

FockVector basis_state(int M, std::uint32_t mask) {
    if (M < 1 || M > 30) throw std::invalid_argument("basis_state: M out of range");
    if (mask >= (1u << M)) throw std::invalid_argument("basis_state: mask exceeds width");
    FockVector v;
    v.M = M;
    v.amp[mask] = Rat(1);
    return v;
}

Rat l_element(const ModelParams& p, const Rat& z, const Rat& w, int aux_in, int q_in,
              int aux_out, int q_out) {
    if (z == 0 || w == 0) throw std::invalid_argument("l_element: zero spectral parameter");
    const Rat& a = p.a;
    if (aux_in + q_in != aux_out + q_out) return Rat(0);  // ice rule
    if (aux_in == aux_out) {
        if (q_in == q_out) {
            if (q_in == aux_in) return a / z * w - z / a;  // 00->00 and 11->11
            return a * z - w / (a * z);                    // 01->01 and 10->10
        }
        return Rat(0);
    }
    if (aux_in == 1 && q_in == 0) return a * a - 1 / (a * a);
    return (a * a - 1 / (a * a)) * w;  // aux_in == 0, q_in == 1
}

Rat k_element(const ModelParams& p, const Rat& z, std::pair<int, int> out_pair) {
    if (z == 0) throw std::invalid_argument("k_element: zero spectral parameter");
    const Rat& a = p.a;
    const Rat& b = p.b;
    if (out_pair == std::pair<int, int>{0, 1}) return b * a * z - 1 / (b * a * z);
    if (out_pair == std::pair<int, int>{1, 0}) return b / (a * z) - a * z / b;
    return Rat(0);
}

namespace {

void check_width(const std::vector<Rat>& w, const FockVector& v) {
    if (static_cast<int>(w.size()) != v.M)
        throw std::invalid_argument("row operator: width mismatch");
}

void prune(FockVector& v) {
    for (auto it = v.amp.begin(); it != v.amp.end();) {
        if (it->second == 0)
            it = v.amp.erase(it);
        else
            ++it;
    }
}

}  // namespace

FockVector apply_row_operator(RowOp kind, const ModelParams& p, const Rat& z,
                              const std::vector<Rat>& w, const FockVector& v) {
    check_width(w, v);
    const int M = v.M;
    const int aux_out_target = (kind == RowOp::B) ? 0 : 1;
    FockVector out;
    out.M = M;
    for (const auto& [mask, amp] : v.amp) {
        // (L_1 ... L_M)_{aux_out, aux_in=1}: sweep sites M..1, the auxiliary
        // register entering site M from the right carries |1>.
        std::map<std::pair<int, std::uint32_t>, Rat> dp;
        dp[{1, 0}] = amp;
        for (int site = M; site >= 1; --site) {
            const Rat& wj = w[site - 1];
            const int q_in = (mask >> (site - 1)) & 1;
            std::map<std::pair<int, std::uint32_t>, Rat> next;
            for (const auto& [key, acc] : dp) {
                const auto [aux_right, partial] = key;
                for (int q_out = 0; q_out < 2; ++q_out) {
                    for (int aux_left = 0; aux_left < 2; ++aux_left) {
                        Rat e = l_element(p, z, wj, aux_right, q_in, aux_left, q_out);
                        if (e == 0) continue;
                        const std::uint32_t nm =
                            partial | (static_cast<std::uint32_t>(q_out) << (site - 1));
                        next[{aux_left, nm}] += acc * e;
                    }
                }
            }
            dp = std::move(next);
        }
        for (const auto& [key, acc] : dp) {
            if (key.first == aux_out_target) out.amp[key.second] += acc;
        }
    }
    prune(out);
    return out;
}

FockVector apply_double_row_b(const ModelParams& p, const Rat& z, const std::vector<Rat>& w,
                              const FockVector& v) {
    check_width(w, v);
    const Rat iz = inv(z);
    const Rat c_db = k_element(p, z, {1, 0});  // b a^-1 z^-1 - b^-1 a z
    const Rat c_bd = k_element(p, z, {0, 1});  // b a z - b^-1 a^-1 z^-1
    FockVector t1 = apply_row_operator(RowOp::D, p, iz, w,
                                       apply_row_operator(RowOp::B, p, z, w, v));
    FockVector t2 = apply_row_operator(RowOp::B, p, iz, w,
                                       apply_row_operator(RowOp::D, p, z, w, v));
    FockVector out;
    out.M = v.M;
    for (const auto& [m, a] : t1.amp) out.amp[m] += c_db * a;
    for (const auto& [m, a] : t2.amp) out.amp[m] += c_bd * a;
    prune(out);
    return out;
}

FockVector apply_double_row_b_literal(const ModelParams& p, const Rat& z,
                                      const std::vector<Rat>& w, const FockVector& v) {
    check_width(w, v);
    const int M = v.M;
    const Rat iz = inv(z);
    FockVector out;
    out.M = M;
    // Both auxiliary registers enter at |1>; at each site the z-row acts
    // before the z^-1-row. The K-operator selects the dual output pair.
    for (const auto& [mask, amp] : v.amp) {
        std::map<std::tuple<int, int, std::uint32_t>, Rat> dp;
        dp[{1, 1, 0}] = amp;
        for (int site = M; site >= 1; --site) {
            const Rat& wj = w[site - 1];
            const int q_in = (mask >> (site - 1)) & 1;
            std::map<std::tuple<int, int, std::uint32_t>, Rat> next;
            for (const auto& [key, acc] : dp) {
                const auto [a2_right, a1_right, partial] = key;
                for (int q_mid = 0; q_mid < 2; ++q_mid) {
                    for (int a1_left = 0; a1_left < 2; ++a1_left) {
                        Rat e1 = l_element(p, z, wj, a1_right, q_in, a1_left, q_mid);
                        if (e1 == 0) continue;
                        for (int q_out = 0; q_out < 2; ++q_out) {
                            for (int a2_left = 0; a2_left < 2; ++a2_left) {
                                Rat e2 = l_element(p, iz, wj, a2_right, q_mid, a2_left, q_out);
                                if (e2 == 0) continue;
                                const std::uint32_t nm =
                                    partial |
                                    (static_cast<std::uint32_t>(q_out) << (site - 1));
                                next[{a2_left, a1_left, nm}] += acc * e1 * e2;
                            }
                        }
                    }
                }
            }
            dp = std::move(next);
        }
        for (const auto& [key, acc] : dp) {
            const auto [a2, a1, nm] = key;
            const Rat k = k_element(p, z, {a2, a1});
            if (k != 0) out.amp[nm] += k * acc;
        }
    }
    prune(out);
    return out;
}

namespace {

Rat contract(const ModelParams& p, const std::vector<Rat>& z, const std::vector<Rat>& w,
             FockVector state, std::uint32_t bra_mask) {
    for (auto it = z.rbegin(); it != z.rend(); ++it)
        state = apply_double_row_b(p, *it, w, state);
    const auto found = state.amp.find(bra_mask);
    return found == state.amp.end() ? Rat(0) : found->second;
}

std::uint32_t mask_of(const OccupationConfig& c) {
    std::uint32_t m = 0;
    for (int xi : c.x) m |= 1u << (xi - 1);
    return m;
}

}  // namespace

Rat wavefunction_oracle(const ModelParams& p, const std::vector<Rat>& z,
                        const std::vector<Rat>& w, const OccupationConfig& x) {
    if (!x.valid() || x.M != static_cast<int>(w.size()) || x.x.size() != z.size())
        throw std::invalid_argument("wavefunction_oracle: dimension mismatch");
    return contract(p, z, w, vacuum_state(x.M), mask_of(x));
}

Rat dual_wavefunction_oracle(const ModelParams& p, const std::vector<Rat>& z,
                             const std::vector<Rat>& w, const OccupationConfig& xbar) {
    if (!xbar.valid() || xbar.M != static_cast<int>(w.size()) || xbar.x.size() != z.size())
        throw std::invalid_argument("dual_wavefunction_oracle: dimension mismatch");
    const std::uint32_t all = (1u << xbar.M) - 1u;
    return contract(p, z, w, basis_state(xbar.M, all & ~mask_of(xbar)), all);
}

}  // namespace rvertex
