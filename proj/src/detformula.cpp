#include "rvertex/detformula.hpp"

#include <stdexcept>

#include "rvertex/determinant.hpp"

namespace rvertex {

Rat domain_wall_det(const ModelParams& p, const std::vector<Rat>& z,
                    const std::vector<Rat>& w) {
    const int M = static_cast<int>(z.size());
    if (M < 1 || w.size() != z.size())
        throw std::invalid_argument("domain_wall_det: need length(z) == length(w) >= 1");
    const Rat& a = p.a;
    const Rat& b = p.b;
    const Rat a2 = a * a;
    const Rat ia2 = inv(a2);

    Rat pref = pow_int(a2 - ia2, M);
    for (const auto& wi : w) pref *= pow_int(wi, M);
    for (int i = 0; i < M; ++i) {
        const Rat z2 = z[i] * z[i];
        pref *= (b / w[i] - inv(b)) * (a2 * z2 - ia2 / z2);
    }

    auto quad = [&](int i, int j) -> Rat {
        const Rat z2 = z[i] * z[i];
        const Rat iz2 = inv(z2);
        const Rat& wj = w[j];
        return (a2 + ia2 - iz2 * wj - z2 / wj) * (a2 + ia2 - iz2 / wj - z2 * wj);
    };

    Rat den(1);
    for (int i = 0; i < M; ++i) {
        for (int j = i + 1; j < M; ++j) {
            const Rat zz = z[i] / z[j];
            const Rat f1 = inv(zz) * (-1) + zz;           // -z_i^-1 z_j + z_i z_j^-1
            const Rat f2 = inv(z[i] * z[j]) - z[i] * z[j];
            const Rat f3 = inv(w[i]) - inv(w[j]);
            const Rat f4 = w[i] * w[j] - 1;
            const Rat f = f1 * f2 * f3 * f4;
            if (f == 0) throw std::domain_error("domain_wall_det: singular denominator");
            den *= f;
        }
    }

    // Row i of the raw determinant times prod_j quad(i, j) gives the entry
    // prod_{l != j} quad(i, l); this keeps every entry polynomial and the
    // value finite on the quad == 0 locus where the partition function is
    // regular.
    Matrix mat(M, std::vector<Rat>(M));
    for (int i = 0; i < M; ++i) {
        std::vector<Rat> q(M);
        for (int j = 0; j < M; ++j) q[j] = quad(i, j);
        std::vector<Rat> prefix(M + 1, Rat(1)), suffix(M + 1, Rat(1));
        for (int j = 0; j < M; ++j) prefix[j + 1] = prefix[j] * q[j];
        for (int j = M - 1; j >= 0; --j) suffix[j] = suffix[j + 1] * q[j];
        for (int j = 0; j < M; ++j) mat[i][j] = prefix[j] * suffix[j + 1];
    }
    return pref / den * det_exact(mat);
}

Rat domain_wall_det_homogeneous(const ModelParams& p, const std::vector<Rat>& z) {
    const int M = static_cast<int>(z.size());
    if (M < 1) throw std::invalid_argument("domain_wall_det_homogeneous: need M >= 1");
    const Rat& a = p.a;
    const Rat& b = p.b;
    const Rat a2 = a * a;
    const Rat ia2 = inv(a2);

    Rat pref = pow_int(a, 2 * M) * pow_int(b - inv(b), M);
    for (const auto& zi : z) {
        const Rat z2 = zi * zi;
        const Rat z4 = z2 * z2;
        if (z4 == 1 || a2 == z2 || a2 * z2 == 1)
            throw std::domain_error("domain_wall_det_homogeneous: singular point");
        pref *= (a2 * z2 - ia2 / z2) / (1 - inv(z4));
        pref *= pow_int(a2 + ia2 - inv(z2) - z2, 2 * M);
    }

    Rat den(1);
    for (int i = 0; i < M; ++i) {
        for (int j = i + 1; j < M; ++j) {
            const Rat zz = z[i] / z[j];
            const Rat f = (-inv(zz) + zz) * (inv(z[i] * z[j]) - z[i] * z[j]);
            if (f == 0) throw std::domain_error("domain_wall_det_homogeneous: coinciding z");
            den *= f;
        }
    }

    Matrix mat(M, std::vector<Rat>(M));
    for (int i = 0; i < M; ++i) {
        const Rat az2 = a2 * z[i] * z[i];
        const Rat d1 = a2 - z[i] * z[i];
        const Rat d2 = 1 - az2;
        Rat power(1);
        Rat d1p = d1 * d1;
        Rat d2p = d2 * d2;
        for (int j = 0; j < M; ++j) {
            mat[i][j] = power / d1p - power / d2p;
            power *= az2;
            d1p *= d1 * d1;
            d2p *= d2 * d2;
        }
    }
    return pref / den * det_exact(mat);
}

}  // namespace rvertex
