#include "rvertex/determinant.hpp"

#include <stdexcept>
#include <utility>

namespace rvertex {

namespace {

Rat laplace(const Matrix& m, std::size_t n) {
    if (n == 1) return m[0][0];
    Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        Matrix minor(n - 1, std::vector<Rat>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        const Rat term = m[0][j] * laplace(minor, n - 1);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

Rat bareiss(const Matrix& m, std::size_t n) {
    // Clear denominators row by row so the elimination stays in Z.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    Rat scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][j].get_den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = m[i][j] * Rat(lcm);
            a[i][j] = scaled.get_num();
        }
        scale /= Rat(lcm);
    }
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return Rat(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det(a[n - 1][n - 1]);
    if (sign < 0) det = -det;
    return det * scale;
}

}  // namespace

Rat det_exact(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det_exact: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_exact: non-square matrix");
    if (n <= 4) return laplace(m, n);
    return bareiss(m, n);
}

}  // namespace rvertex
