#include "rvertex/symfunc.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace rvertex {

namespace {

struct FactorTables {
    // Index ℓ = 0..N-1 labels z_ℓ, t = 0/1 labels exponent sign +1/-1.
    // tau_norm[ℓ][t]   = 1 / (z^{2s} - z^{-2s})
    // boundary[ℓ][t]   = reflection factor
    // full_row[ℓ][t]   = product over all M inhomogeneities
    // left[ℓ][t][x]    = product over columns j < x      (x = 1..M)
    // right[ℓ][t][x]   = product over columns j > x
    // cross[ℓ][t][m][u] = pair factor for (z_ℓ^{s}, z_m^{u})
    std::vector<std::array<Rat, 2>> tau_norm, boundary, full_row;
    std::vector<std::array<std::vector<Rat>, 2>> left, right;
    std::vector<std::array<std::vector<std::array<Rat, 2>>, 2>> cross;
};

FactorTables build_tables(const ModelParams& p, const std::vector<Rat>& z,
                          const std::vector<Rat>& w, bool dual) {
    const int N = static_cast<int>(z.size());
    const int M = static_cast<int>(w.size());
    const Rat& a = p.a;
    const Rat& b = p.b;
    const Rat ia = inv(a);

    std::vector<std::array<Rat, 2>> zs(N);  // z^{+1}, z^{-1}
    for (int l = 0; l < N; ++l) {
        zs[l][0] = z[l];
        zs[l][1] = inv(z[l]);
    }

    FactorTables t;
    t.tau_norm.resize(N);
    t.boundary.resize(N);
    t.full_row.resize(N);
    t.left.resize(N);
    t.right.resize(N);
    t.cross.resize(N);
    for (int l = 0; l < N; ++l) {
        for (int s = 0; s < 2; ++s) {
            const Rat& u = zs[l][s];
            const Rat iu = zs[l][1 - s];
            const Rat den = u * u - iu * iu;
            if (den == 0) throw std::domain_error("eval_F: z_j^4 == 1");
            t.tau_norm[l][s] = 1 / den;
            t.boundary[l][s] =
                dual ? Rat(b * a * u - inv(b * a * u)) : Rat(b * iu * ia - inv(b) * a * u);

            Rat row(1);
            std::vector<Rat> lefts(M + 1), rights(M + 2);
            lefts[1] = Rat(1);  // empty product for x = 1
            for (int j = 1; j <= M; ++j) {
                const Rat& wj = w[j - 1];
                row *= dual ? Rat(a * iu * wj - ia * u) : Rat(a * iu - ia * u * wj);
                if (j + 1 <= M)
                    lefts[j + 1] = lefts[j] * (dual ? Rat(a * iu - ia * u * wj)
                                                    : Rat(a * iu * wj - ia * u));
            }
            rights[M] = Rat(1);  // empty product for x = M
            for (int x = M - 1; x >= 1; --x) {
                const Rat& wn = w[x];  // column x+1
                rights[x] = rights[x + 1] * (dual ? Rat(a * u * wn - ia * iu)
                                                  : Rat(a * u - ia * iu * wn));
            }
            t.full_row[l][s] = row;
            t.left[l][s].assign(lefts.begin() + 1, lefts.begin() + M + 1);
            t.right[l][s].assign(rights.begin() + 1, rights.begin() + M + 1);
        }
    }
    for (int l = 0; l < N; ++l) {
        for (int s = 0; s < 2; ++s) {
            t.cross[l][s].resize(N);
            for (int m = 0; m < N; ++m) {
                for (int u2 = 0; u2 < 2; ++u2) {
                    if (m == l) {
                        t.cross[l][s][m][u2] = Rat(0);
                        continue;
                    }
                    const Rat& uj = zs[l][s];
                    const Rat iuj = zs[l][1 - s];
                    const Rat& uk = zs[m][u2];
                    const Rat iuk = zs[m][1 - u2];
                    const Rat a2 = a * a;
                    const Rat ia2 = ia * ia;
                    const Rat num =
                        (a2 * uj * uk - ia2 * iuj * iuk) * (a2 * iuj * uk - ia2 * uj * iuk);
                    const Rat den = (uj * uk - iuj * iuk) * (iuj * uk - uj * iuk);
                    if (den == 0)
                        throw std::domain_error("eval_F: coinciding spectral parameters");
                    t.cross[l][s][m][u2] = num / den;
                }
            }
        }
    }
    return t;
}

Rat eval_sum(const ModelParams& p, const std::vector<Rat>& z, const std::vector<Rat>& w,
             const OccupationConfig& occ, bool dual) {
    const int N = static_cast<int>(z.size());
    const int M = static_cast<int>(w.size());
    if (!occ.valid() || occ.M != M || static_cast<int>(occ.x.size()) != N)
        throw std::invalid_argument("eval_F: dimension mismatch");
    const Rat& a = p.a;
    Rat prefactor = pow_int(a * a - inv(a * a), N);
    for (const auto& zj : z) {
        const Rat z2 = zj * zj;
        prefactor *= (-a * a * z2 + inv(a * a * z2));
    }
    if (N == 0) return prefactor;

    const FactorTables tab = build_tables(p, z, w, dual);

    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total(0);
    do {
        for (unsigned tmask = 0; tmask < (1u << N); ++tmask) {
            Rat term(1);
            for (int j = 0; j < N; ++j) term *= tab.tau_norm[j][(tmask >> j) & 1u];
            // slot k carries variable z_{perm[k]} with sign tau_{perm[k]}
            for (int j = 0; j < N && term != 0; ++j) {
                const int lj = perm[j];
                const int sj = (tmask >> lj) & 1u;
                for (int k = j + 1; k < N; ++k) {
                    const int lk = perm[k];
                    term *= tab.cross[lj][sj][lk][(tmask >> lk) & 1u];
                }
            }
            for (int k = 0; k < N; ++k) {
                const int l = perm[k];
                const int s = (tmask >> l) & 1u;
                const int xk = occ.x[k];
                term *= tab.boundary[l][s] * tab.full_row[l][s] * tab.left[l][s][xk - 1] *
                        tab.right[l][s][xk - 1];
            }
            total += term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return prefactor * total;
}

}  // namespace

Rat eval_F(const ModelParams& p, const std::vector<Rat>& z, const std::vector<Rat>& w,
           const OccupationConfig& x) {
    return eval_sum(p, z, w, x, false);
}

Rat eval_F_bar(const ModelParams& p, const std::vector<Rat>& z, const std::vector<Rat>& w,
               const OccupationConfig& xbar) {
    return eval_sum(p, z, w, xbar, true);
}

namespace {

Rat n1_closed_form(const ModelParams& p, const Rat& z, const std::vector<Rat>& w, int x1,
                   bool dual) {
    const int M = static_cast<int>(w.size());
    if (x1 < 1 || x1 > M) throw std::invalid_argument("n1 closed form: x1 out of range");
    const Rat& a = p.a;
    const Rat& b = p.b;
    const Rat z2 = z * z;
    Rat pref = (a * a - inv(a * a)) * (-a * a * z2 + inv(a * a * z2));
    Rat total(0);
    for (int s = 0; s < 2; ++s) {
        const Rat u = (s == 0) ? z : inv(z);
        const Rat iu = (s == 0) ? inv(z) : z;
        const Rat den = u * u - iu * iu;
        Rat term = inv(den);
        term *= dual ? Rat(b * a * u - inv(b * a * u)) : Rat(b * iu / a - a * u / b);
        for (int j = 1; j <= M; ++j)
            term *= dual ? Rat(a * iu * w[j - 1] - u / a) : Rat(a * iu - u * w[j - 1] / a);
        for (int j = 1; j < x1; ++j)
            term *= dual ? Rat(a * iu - u * w[j - 1] / a) : Rat(a * iu * w[j - 1] - u / a);
        for (int j = x1 + 1; j <= M; ++j)
            term *= dual ? Rat(a * u * w[j - 1] - iu / a) : Rat(a * u - iu * w[j - 1] / a);
        total += term;
    }
    return pref * total;
}

}  // namespace

Rat wavefunction_n1(const ModelParams& p, const Rat& z, const std::vector<Rat>& w, int x1) {
    return n1_closed_form(p, z, w, x1, false);
}

Rat dual_wavefunction_n1(const ModelParams& p, const Rat& z, const std::vector<Rat>& w, int x1) {
    return n1_closed_form(p, z, w, x1, true);
}

}  // namespace rvertex
