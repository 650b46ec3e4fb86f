#include "rvertex/verify.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

#include "rvertex/detformula.hpp"
#include "rvertex/polynomial.hpp"
#include "rvertex/sample.hpp"
#include "rvertex/symfunc.hpp"
#include "rvertex/bethe.hpp"

namespace rvertex {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string point_text(const ModelParams& p, const std::vector<Rat>& z,
                       const std::vector<Rat>& w) {
    return "a=" + to_string(p.a) + " b=" + to_string(p.b) + " z=" + to_string(z) +
           " w=" + to_string(w);
}

Rat oracle(const ModelParams& p, const std::vector<Rat>& z, const std::vector<Rat>& w,
           const OccupationConfig& x, bool dual) {
    return dual ? dual_wavefunction_oracle(p, z, w, x) : wavefunction_oracle(p, z, w, x);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

VerificationReport check_lemma_identity(const ModelParams& p, const Rat& z,
                                        const std::vector<Rat>& w, int x1,
                                        std::uint64_t seed, Mutation mutation) {
    if (x1 < 2 || static_cast<int>(w.size()) < x1 - 1)
        throw std::invalid_argument("check_lemma_identity: need x1 >= 2 and w covering x1-1 columns");
    const auto t0 = Clock::now();
    const Rat& a = p.a;
    const Rat iz = inv(z);

    Rat lhs(0);
    for (int j = 1; j <= x1 - 1; ++j) {
        Rat term = w[j - 1];
        for (int k = 1; k < j; ++k)
            term *= (a * iz - z * w[k - 1] / a) * (a * iz * w[k - 1] - z / a);
        for (int k = j + 1; k <= x1 - 1; ++k)
            term *= (a * z * w[k - 1] - iz / a) * (a * z - iz * w[k - 1] / a);
        lhs += term;
    }
    lhs *= (a * a - inv(a * a)) * (z * z - iz * iz);

    Rat plus(1), minus(1);
    for (int k = 1; k <= x1 - 1; ++k) {
        plus *= (a * z * w[k - 1] - iz / a) * (a * z - iz * w[k - 1] / a);
        minus *= (a * iz * w[k - 1] - z / a) * (a * iz - z * w[k - 1] / a);
    }
    const Rat rhs = mutate(plus - minus, mutation);

    std::string point = "a=" + to_string(p.a) + " b=" + to_string(p.b) +
                        " z=" + to_string(z) + " w=" + to_string(w) +
                        " x1=" + std::to_string(x1);
    return make_report("lemma", "one-column summation identity", seed, std::move(point), lhs,
                       rhs, ms_since(t0));
}

VerificationReport check_theorem_5_2(const ModelParams& p, const std::vector<Rat>& z,
                                     const std::vector<Rat>& w, const OccupationConfig& x,
                                     bool dual, std::uint64_t seed, Mutation mutation) {
    const auto t0 = Clock::now();
    const Rat lhs = oracle(p, z, w, x, dual);
    const Rat rhs = mutate(dual ? eval_F_bar(p, z, w, x) : eval_F(p, z, w, x), mutation);
    return make_report(dual ? "theorem52-dual" : "theorem52",
                       "wavefunction equals closed-form symmetric function", seed,
                       point_text(p, z, w), lhs, rhs, ms_since(t0));
}

namespace {

VerificationReport degree_check(const ModelParams& p, const std::vector<Rat>& z,
                                std::vector<Rat> w, OccupationConfig x, bool dual,
                                std::uint64_t seed, Mutation mutation) {
    const auto t0 = Clock::now();
    const int N = static_cast<int>(z.size());
    x.x.back() = x.M;  // degree statement applies at x_N = M
    std::vector<std::pair<Rat, Rat>> samples;
    for (int t = 1; t <= 2 * N + 2; ++t) {
        w.back() = rat(t);
        samples.emplace_back(rat(t), oracle(p, z, w, x, dual));
    }
    const auto coeffs = interpolate_univariate(samples);
    const long degree = static_cast<long>(coeffs.size()) - 1;
    const Rat lhs = Rat(static_cast<long>(degree));
    const Rat rhs = mutate(Rat(2L * N - 1), mutation);
    return make_report(dual ? "property-degree-dual" : "property-degree",
                       "degree bound in the last inhomogeneity", seed,
                       point_text(p, z, w) + " x_N=M", lhs, rhs, ms_since(t0));
}

VerificationReport symmetry_check(const ModelParams& p, const std::vector<Rat>& z,
                                  const std::vector<Rat>& w, const OccupationConfig& x,
                                  bool dual, std::uint64_t seed, Mutation mutation) {
    const auto t0 = Clock::now();
    const Rat lhs = oracle(p, z, w, x, dual);
    std::vector<Rat> swapped = z;
    if (swapped.size() >= 2) std::swap(swapped[0], swapped[1]);
    const Rat rhs = mutate(oracle(p, swapped, w, x, dual), mutation);
    return make_report(dual ? "property-symmetry-dual" : "property-symmetry",
                       "symmetry in the spectral parameters", seed, point_text(p, z, w), lhs,
                       rhs, ms_since(t0));
}

VerificationReport inversion_check(const ModelParams& p, const std::vector<Rat>& z,
                                   const std::vector<Rat>& w, const OccupationConfig& x,
                                   bool dual, std::uint64_t seed, Mutation mutation) {
    const auto t0 = Clock::now();
    const Rat& a = p.a;
    const Rat z2 = z[0] * z[0];
    std::vector<Rat> inverted = z;
    inverted[0] = inv(z[0]);
    // cross-multiplied so the check is valid even where the wavefunction
    // vanishes
    const Rat lhs = oracle(p, inverted, w, x, dual) * (a * a * z2 - inv(a * a * z2));
    const Rat rhs = mutate(
        oracle(p, z, w, x, dual) * (a * a / z2 - z2 / (a * a)), mutation);
    return make_report(dual ? "property-inversion-dual" : "property-inversion",
                       "spectral inversion ratio", seed, point_text(p, z, w), lhs, rhs,
                       ms_since(t0));
}

VerificationReport recursion_check(const ModelParams& p, const std::vector<Rat>& z,
                                   std::vector<Rat> w, OccupationConfig x, bool dual,
                                   std::uint64_t seed, Mutation mutation) {
    const auto t0 = Clock::now();
    const int N = static_cast<int>(z.size());
    const int M = x.M;
    const Rat& a = p.a;
    const Rat& b = p.b;
    const Rat zN = z.back();
    const Rat izN = inv(zN);
    x.x.back() = M;
    w.back() = dual ? inv(a * a * zN * zN) : a * a * zN * zN;

    const Rat lhs = oracle(p, z, w, x, dual);

    Rat factor = (a * a - inv(a * a));
    factor *= dual ? Rat(b * a * zN - inv(b * a * zN)) : Rat(b * izN / a - a * zN / b);
    const Rat a3 = a * a * a;
    for (int j = 0; j < N; ++j)
        factor *= dual ? Rat(a * z[j] - izN * izN * inv(z[j]) / a3)
                       : Rat(a3 * zN * zN * z[j] - inv(a * z[j]));
    for (int j = 0; j + 1 < N; ++j)
        factor *= dual ? Rat(a / z[j] - z[j] * izN * izN / a3)
                       : Rat(a3 * zN * zN / z[j] - z[j] / a);
    for (int j = 0; j + 1 < M; ++j) {
        const Rat& wj = w[j];
        factor *= (a * izN * wj - zN / a) * (a * izN - zN * wj / a);
    }

    Rat sub(1);
    if (M >= 2) {
        OccupationConfig xr;
        xr.M = M - 1;
        xr.x.assign(x.x.begin(), x.x.end() - 1);
        std::vector<Rat> zr(z.begin(), z.end() - 1);
        std::vector<Rat> wr(w.begin(), w.end() - 1);
        sub = oracle(p, zr, wr, xr, dual);
    }
    const Rat rhs = mutate(factor * sub, mutation);
    return make_report(dual ? "property-recursion-dual" : "property-recursion",
                       "frozen-boundary recursion", seed,
                       point_text(p, z, w) + " x_N=M", lhs, rhs, ms_since(t0));
}

VerificationReport factorization_check(const ModelParams& p, const std::vector<Rat>& z,
                                       const std::vector<Rat>& w, OccupationConfig x,
                                       bool dual, std::uint64_t seed, Mutation mutation) {
    const auto t0 = Clock::now();
    const int N = static_cast<int>(z.size());
    const int M = x.M;
    if (M < 2 || N >= M)
        throw std::invalid_argument("factorization check: need N < M and M >= 2");
    if (x.x.back() == M) {
        std::iota(x.x.begin(), x.x.end(), 1);  // any configuration with x_N != M
    }
    const Rat& a = p.a;
    const Rat& wM = w.back();

    const Rat lhs = oracle(p, z, w, x, dual);

    Rat factor(1);
    for (int j = 0; j < N; ++j) {
        const Rat& zj = z[j];
        factor *= dual ? Rat((a * zj * wM - inv(a * zj)) * (a * wM / zj - zj / a))
                       : Rat((a / zj - zj * wM / a) * (a * zj - wM / (a * zj)));
    }
    OccupationConfig xr = x;
    xr.M = M - 1;
    std::vector<Rat> wr(w.begin(), w.end() - 1);
    const Rat rhs = mutate(factor * oracle(p, z, wr, xr, dual), mutation);
    return make_report(dual ? "property-factorization-dual" : "property-factorization",
                       "last-column factorization", seed,
                       point_text(p, z, w) + " x_N!=M", lhs, rhs, ms_since(t0));
}

VerificationReport initial_check(const ModelParams& p, const std::vector<Rat>& z,
                                 const std::vector<Rat>& w, const OccupationConfig& x,
                                 bool dual, std::uint64_t seed, Mutation mutation) {
    const auto t0 = Clock::now();
    const int M = x.M;
    OccupationConfig one;
    one.M = M;
    one.x = {M};
    const Rat lhs = oracle(p, {z[0]}, w, one, dual);
    const Rat rhs = mutate(
        dual ? dual_wavefunction_n1(p, z[0], w, M) : wavefunction_n1(p, z[0], w, M),
        mutation);
    return make_report(dual ? "property-initial-dual" : "property-initial",
                       "one-particle initial condition", seed, point_text(p, {z[0]}, w), lhs,
                       rhs, ms_since(t0));
}

}  // namespace

std::vector<VerificationReport> check_properties(const ModelParams& p,
                                                 const std::vector<Rat>& z,
                                                 const std::vector<Rat>& w,
                                                 const OccupationConfig& x, unsigned which,
                                                 bool dual, std::uint64_t seed,
                                                 Mutation mutation) {
    if (!x.valid() || x.M != static_cast<int>(w.size()) || x.x.size() != z.size() ||
        z.empty())
        throw std::invalid_argument("check_properties: dimension mismatch");
    std::vector<VerificationReport> out;
    if (which & kDegree) out.push_back(degree_check(p, z, w, x, dual, seed, mutation));
    if (which & kSymmetry) out.push_back(symmetry_check(p, z, w, x, dual, seed, mutation));
    if (which & kInversion) out.push_back(inversion_check(p, z, w, x, dual, seed, mutation));
    if (which & kRecursionTop) out.push_back(recursion_check(p, z, w, x, dual, seed, mutation));
    if (which & kFactorization)
        out.push_back(factorization_check(p, z, w, x, dual, seed, mutation));
    if (which & kInitial) out.push_back(initial_check(p, z, w, x, dual, seed, mutation));
    return out;
}

VerificationReport check_pairing(const ModelParams& p, const std::vector<Rat>& z,
                                 const std::vector<Rat>& w, int N, bool homogeneous,
                                 std::uint64_t seed, Mutation mutation) {
    const auto t0 = Clock::now();
    const int M = static_cast<int>(z.size());
    if (N < 0 || N > M || static_cast<int>(w.size()) != M)
        throw std::invalid_argument("check_pairing: need 0 <= N <= M == length(w)");

    const std::vector<Rat> w_eff = homogeneous ? std::vector<Rat>(M, Rat(1)) : w;
    const std::vector<Rat> z_dual(z.begin(), z.begin() + (M - N));
    const std::vector<Rat> z_primal(z.begin() + (M - N), z.end());

    Rat lhs(0);
    for (std::uint32_t mask = 0; mask < (1u << M); ++mask) {
        if (__builtin_popcount(mask) != N) continue;
        OccupationConfig xc, xbar;
        xc.M = M;
        xbar.M = M;
        for (int i = 1; i <= M; ++i) {
            if (mask & (1u << (i - 1)))
                xc.x.push_back(i);
            else
                xbar.x.push_back(i);
        }
        lhs += eval_F_bar(p, z_dual, w_eff, xbar) * eval_F(p, z_primal, w_eff, xc);
    }
    const Rat rhs = mutate(
        homogeneous ? domain_wall_det_homogeneous(p, z) : domain_wall_det(p, z, w),
        mutation);
    return make_report(homogeneous ? "pairing-hom" : "pairing",
                       homogeneous
                           ? "pairing over complementary configurations, homogeneous limit"
                           : "pairing over complementary configurations",
                       seed, point_text(p, z, w_eff) + " N=" + std::to_string(N), lhs, rhs,
                       ms_since(t0));
}

std::vector<VerificationReport> run_suite(std::uint64_t seed,
                                          const std::vector<std::pair<int, int>>& sizes,
                                          unsigned checks) {
    std::vector<VerificationReport> out;
    std::uint64_t counter = seed;
    auto next_seed = [&counter]() { return splitmix64(counter++); };

    for (const auto& [M, N] : sizes) {
        if (N < 0 || N > M)
            throw std::invalid_argument("run_suite: need 0 <= N <= M");
        // deterministic spread-out configuration: N positions in 1..M
        OccupationConfig x;
        x.M = M;
        for (int j = 1; j <= N; ++j) x.x.push_back(M - N + j);
        if (N >= 1) x.x.front() = 1;
        if (!x.valid()) {
            x.x.clear();
            for (int j = 1; j <= N; ++j) x.x.push_back(j);
        }

        if (checks & kLemma) {
            const std::uint64_t s = next_seed();
            const SamplePoint pt = sample_point(s, std::max(M, 2), 1);
            const int x1 = std::min<int>(static_cast<int>(pt.w.size()) + 1, M + 1);
            out.push_back(check_lemma_identity({pt.a, pt.b}, pt.z[0], pt.w, x1, s));
        }
        if ((checks & kTheorem52) && N >= 1) {
            const std::uint64_t s = next_seed();
            const SamplePoint pt = sample_point(s, M, N);
            out.push_back(check_theorem_5_2({pt.a, pt.b}, pt.z, pt.w, x, false, s));
            out.push_back(check_theorem_5_2({pt.a, pt.b}, pt.z, pt.w, x, true, s));
        }
        if ((checks & kProperties) && N >= 1 && N < M) {
            const std::uint64_t s = next_seed();
            const SamplePoint pt = sample_point(s, M, N);
            for (bool dual : {false, true}) {
                auto reports =
                    check_properties({pt.a, pt.b}, pt.z, pt.w, x, kAllProperties, dual, s);
                out.insert(out.end(), reports.begin(), reports.end());
            }
        }
        if (checks & kPairing) {
            const std::uint64_t s = next_seed();
            const SamplePoint pt = sample_point(s, M, M, kHomogeneousDet);
            out.push_back(check_pairing({pt.a, pt.b}, pt.z, pt.w, N, false, s));
            out.push_back(check_pairing({pt.a, pt.b}, pt.z, pt.w, N, true, s));
        }
        if ((checks & kBethe) && N >= 1) {
            const std::uint64_t s = next_seed();
            const SamplePoint pt = sample_point(s, M, N, kBetheMomenta);
            out.push_back(check_coordinate_relation({pt.a, pt.b}, pt.z, M, x, s));
        }
    }
    return out;
}

}  // namespace rvertex
