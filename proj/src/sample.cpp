#include "rvertex/sample.hpp"

#include <random>
#include <stdexcept>

namespace rvertex {

namespace {

bool nonzero_all(const std::vector<Rat>& v) {
    for (const auto& r : v)
        if (r == 0) return false;
    return true;
}

bool fourth_power_not_one(const Rat& r) {
    return r != 1 && r != -1;  // r^4 == 1 over Q iff r == +-1
}

}  // namespace

bool satisfies_invariants(const SamplePoint& p, unsigned flags) {
    const Rat& a = p.a;
    const Rat& b = p.b;
    if (a == 0 || b == 0) return false;
    if (!nonzero_all(p.z) || !nonzero_all(p.w)) return false;
    if (!fourth_power_not_one(a)) return false;
    if (b == 1 || b == -1) return false;

    const Rat a2 = a * a;
    const Rat ia2 = 1 / a2;
    for (const auto& z : p.z) {
        if (!fourth_power_not_one(z)) return false;
        // a^2 z^2 == 1 (or its inverse image z^2 == a^2) makes the double-row
        // creation operator vanish identically; every identity then degenerates
        // to 0 == 0 and the suite loses its teeth
        const Rat z2 = z * z;
        if (a2 * z2 == 1 || z2 == a2) return false;
    }
    // z_j != +-z_k, z_j != +-1/z_k for j < k
    for (std::size_t j = 0; j < p.z.size(); ++j) {
        for (std::size_t k = j + 1; k < p.z.size(); ++k) {
            const Rat& zj = p.z[j];
            const Rat& zk = p.z[k];
            if (zj == zk || zj == -zk) return false;
            const Rat izk = 1 / zk;
            if (zj == izk || zj == -izk) return false;
        }
    }
    // distinct w's, w_i w_j != 1
    for (std::size_t i = 0; i < p.w.size(); ++i) {
        for (std::size_t j = i + 1; j < p.w.size(); ++j) {
            if (p.w[i] == p.w[j]) return false;
            if (p.w[i] * p.w[j] == 1) return false;
        }
    }
    // determinant entry denominators
    for (const auto& z : p.z) {
        const Rat z2 = z * z;
        const Rat iz2 = 1 / z2;
        for (const auto& w : p.w) {
            if (a2 + ia2 - iz2 * w - z2 / w == 0) return false;
            if (a2 + ia2 - iz2 / w - z2 * w == 0) return false;
        }
    }
    if (flags & kHomogeneousDet) {
        for (const auto& z : p.z) {
            const Rat z2 = z * z;
            if (a2 == z2 || a2 * z2 == 1) return false;
            if (a2 + ia2 - z2 - 1 / z2 == 0) return false;
        }
    }
    if (flags & kBetheMomenta) {
        std::vector<Rat> power_sums;
        for (const auto& z : p.z) {
            const Rat z2 = z * z;
            if (z2 == a2) return false;
            power_sums.push_back(z2 + 1 / z2);
        }
        for (std::size_t j = 0; j < power_sums.size(); ++j)
            for (std::size_t k = j + 1; k < power_sums.size(); ++k)
                if (power_sums[j] == power_sums[k]) return false;
    }
    return true;
}

SamplePoint sample_point(std::uint64_t seed, int M, int N, unsigned flags, int digit_bound) {
    if (M < 1 || N < 0) throw std::invalid_argument("sample_point: need M >= 1, N >= 0");
    if (digit_bound < 2) throw std::invalid_argument("sample_point: digit_bound too small");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-digit_bound, digit_bound);
    std::uniform_int_distribution<int> den(1, digit_bound);
    auto draw = [&]() {
        int p = 0;
        while (p == 0) p = num(rng);
        return rat(p, den(rng));
    };
    constexpr long kMaxRejections = 1000000;
    for (long tries = 0; tries < kMaxRejections; ++tries) {
        SamplePoint pt;
        pt.seed = seed;
        pt.a = draw();
        pt.b = draw();
        pt.z.reserve(N);
        for (int i = 0; i < N; ++i) pt.z.push_back(draw());
        pt.w.reserve(M);
        for (int i = 0; i < M; ++i) pt.w.push_back(draw());
        if (satisfies_invariants(pt, flags)) return pt;
    }
    throw std::runtime_error("sample_point: rejection limit reached; widen digit_bound");
}

std::string describe(const SamplePoint& p) {
    return "a=" + to_string(p.a) + " b=" + to_string(p.b) + " z=" + to_string(p.z) +
           " w=" + to_string(p.w);
}

}  // namespace rvertex
