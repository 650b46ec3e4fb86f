#include "rvertex/bethe.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "rvertex/sample.hpp"
#include "rvertex/symfunc.hpp"

namespace rvertex {

BetheParams momenta_from_spectral(const ModelParams& p, const std::vector<Rat>& z, int M) {
    const Rat& a = p.a;
    const Rat& b = p.b;
    if (b * b == 1) throw std::domain_error("momenta_from_spectral: b^2 == 1");
    BetheParams bp;
    bp.M = M;
    bp.Delta = -(a * a + inv(a * a)) / 2;
    bp.pprime = -(b + inv(b)) * (a * a - inv(a * a)) / (2 * (b - inv(b)));
    bp.X.reserve(z.size());
    for (const auto& zl : z) {
        const Rat den = a / zl - zl / a;
        if (den == 0) throw std::domain_error("momenta_from_spectral: z^2 == a^2");
        bp.X.push_back((a * zl - inv(a * zl)) / den);
    }
    return bp;
}

Rat eval_f(const BetheParams& bp, const OccupationConfig& x) {
    const int N = static_cast<int>(bp.X.size());
    if (!x.valid() || x.M != bp.M || static_cast<int>(x.x.size()) != N)
        throw std::invalid_argument("eval_f: dimension mismatch");
    for (const auto& xl : bp.X)
        if (xl == 0) throw std::invalid_argument("eval_f: zero momentum variable");
    if (N == 0) return Rat(1);

    // Mutated momentum values and the power table X^{-x_k} for each sign.
    std::vector<std::array<Rat, 2>> val(N), coef(N);
    std::vector<std::array<std::vector<Rat>, 2>> neg_pow(N);
    for (int l = 0; l < N; ++l) {
        val[l][0] = bp.X[l];
        val[l][1] = inv(bp.X[l]);
        for (int s = 0; s < 2; ++s) {
            coef[l][s] = 1 + (bp.pprime - bp.Delta) * val[l][s];
            neg_pow[l][s].resize(bp.M + 1);
            neg_pow[l][s][0] = Rat(1);
            const Rat step = val[l][1 - s];  // X^{-1} for the chosen sign
            for (int e = 1; e <= bp.M; ++e) neg_pow[l][s][e] = neg_pow[l][s][e - 1] * step;
        }
    }

    auto inversion_sign = [](const std::vector<int>& perm) {
        int inv_count = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv_count;
        return (inv_count % 2 == 0) ? 1 : -1;
    };

    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total(0);
    do {
        const int perm_sign = inversion_sign(perm);
        for (unsigned tmask = 0; tmask < (1u << N); ++tmask) {
            const int sign = perm_sign * ((__builtin_popcount(tmask) % 2 == 0) ? 1 : -1);
            Rat term(sign);
            for (int j = 0; j < N; ++j) {
                const int lj = perm[j];
                const int sj = (tmask >> lj) & 1u;
                const Rat& Yj = val[lj][sj];
                for (int k = j + 1; k < N; ++k) {
                    const int lk = perm[k];
                    const int sk = (tmask >> lk) & 1u;
                    const Rat& Yk = val[lk][sk];
                    term *= (1 - 2 * bp.Delta * Yj + Yj / Yk) *
                            (1 - 2 * bp.Delta * Yk + Yj * Yk) / Yj;
                }
            }
            for (int k = 0; k < N; ++k) {
                const int l = perm[k];
                const int s = (tmask >> l) & 1u;
                term *= neg_pow[l][s][x.x[k]] * coef[l][s];
            }
            total += term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

VerificationReport check_coordinate_relation(const ModelParams& p, const std::vector<Rat>& z,
                                             int M, const OccupationConfig& x,
                                             std::uint64_t seed, Mutation mutation) {
    const auto t0 = std::chrono::steady_clock::now();
    const int N = static_cast<int>(z.size());
    const Rat& a = p.a;
    const Rat& b = p.b;
    const Rat a2 = a * a;
    const Rat ia2 = inv(a2);

    std::vector<Rat> ones(M, Rat(1));
    const Rat lhs = eval_F(p, z, ones, x);

    Rat pre = pow_int(b - inv(b), N);
    for (int j = 0; j < N; ++j) {
        const Rat pj = z[j] * z[j] + inv(z[j] * z[j]);
        for (int k = j + 1; k < N; ++k) {
            const Rat pk = z[k] * z[k] + inv(z[k] * z[k]);
            if (pk == pj)
                throw std::domain_error("check_coordinate_relation: z_j^2 + z_j^-2 collide");
            pre *= (a2 + ia2 - pj) * (a2 + ia2 - pk) / (pow_int(a2 - ia2, 2) * (pk - pj));
        }
    }
    for (int j = 0; j < N; ++j) {
        const Rat z2 = z[j] * z[j];
        const Rat den = z2 - inv(z2);
        if (den == 0) throw std::domain_error("check_coordinate_relation: z_j^4 == 1");
        pre *= (-a2 * z2 + ia2 / z2) * pow_int(a2 + ia2 - z2 - inv(z2), M) / den;
    }
    const BetheParams bp = momenta_from_spectral(p, z, M);
    const Rat rhs = mutate(pre * eval_f(bp, x), mutation);

    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    std::string point = "a=" + to_string(a) + " b=" + to_string(b) + " z=" + to_string(z) +
                        " w=all-ones M=" + std::to_string(M);
    return make_report("bethe-relation", "coordinate Bethe ansatz form of the homogeneous wavefunction",
                       seed, std::move(point), lhs, rhs, ms);
}

}  // namespace rvertex
