#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rvertex/detformula.hpp"
#include "rvertex/lattice.hpp"
#include "rvertex/sample.hpp"
#include "rvertex/symfunc.hpp"

using namespace rvertex;

TEST_CASE("anchor value via the closed-form sum") {
    CHECK(eval_F({rat(2), rat(3)}, {rat(2)}, {rat(1)}, {1, {1}}) == rat(1275, 8));
}

TEST_CASE("N=1 sum coincides with the explicit one-particle formulas") {
    const SamplePoint pt = sample_point(71, 4, 1);
    const ModelParams p{pt.a, pt.b};
    for (int x1 = 1; x1 <= 4; ++x1) {
        CHECK(eval_F(p, pt.z, pt.w, {4, {x1}}) == wavefunction_n1(p, pt.z[0], pt.w, x1));
        CHECK(eval_F_bar(p, pt.z, pt.w, {4, {x1}}) ==
              dual_wavefunction_n1(p, pt.z[0], pt.w, x1));
    }
}

TEST_CASE("closed form equals the lattice contraction") {
    const SamplePoint pt = sample_point(73, 3, 2);
    const ModelParams p{pt.a, pt.b};
    const OccupationConfig x{3, {1, 3}};
    CHECK(eval_F(p, pt.z, pt.w, x) == wavefunction_oracle(p, pt.z, pt.w, x));
    CHECK(eval_F_bar(p, pt.z, pt.w, x) == dual_wavefunction_oracle(p, pt.z, pt.w, x));
}

TEST_CASE("sum is invariant under spectral permutations") {
    const SamplePoint pt = sample_point(79, 4, 3);
    const ModelParams p{pt.a, pt.b};
    const OccupationConfig x{4, {1, 2, 4}};
    const Rat base = eval_F(p, pt.z, pt.w, x);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::vector<Rat> z = pt.z;
            std::swap(z[i], z[j]);
            CHECK(eval_F(p, z, pt.w, x) == base);
        }
}

TEST_CASE("inversion ratio") {
    const SamplePoint pt = sample_point(83, 3, 2);
    const ModelParams p{pt.a, pt.b};
    const OccupationConfig x{3, {2, 3}};
    const Rat a2 = pt.a * pt.a, z2 = pt.z[1] * pt.z[1];
    std::vector<Rat> zi = pt.z;
    zi[1] = inv(pt.z[1]);
    CHECK(eval_F(p, zi, pt.w, x) * (a2 * z2 - inv(a2 * z2)) ==
          eval_F(p, pt.z, pt.w, x) * (a2 / z2 - z2 / a2));
}

TEST_CASE("full configuration reproduces the domain-wall value from both variants") {
    const SamplePoint pt = sample_point(89, 3, 3);
    const ModelParams p{pt.a, pt.b};
    const OccupationConfig full{3, {1, 2, 3}};
    const Rat zdw = domain_wall_det(p, pt.z, pt.w);
    CHECK(eval_F(p, pt.z, pt.w, full) == zdw);
    CHECK(eval_F_bar(p, pt.z, pt.w, full) == zdw);
}

TEST_CASE("last-column factorization when the last site is empty") {
    const SamplePoint pt = sample_point(97, 4, 2);
    const ModelParams p{pt.a, pt.b};
    const OccupationConfig x{4, {1, 3}};
    const Rat a = pt.a;
    const Rat wM = pt.w.back();
    Rat factor(1);
    for (const auto& zj : pt.z)
        factor *= (a / zj - zj * wM / a) * (a * zj - wM / (a * zj));
    const std::vector<Rat> wr(pt.w.begin(), pt.w.end() - 1);
    CHECK(eval_F(p, pt.z, pt.w, x) == factor * eval_F(p, pt.z, wr, {3, {1, 3}}));
}

TEST_CASE("singular inputs are rejected") {
    const ModelParams p{rat(2), rat(3)};
    CHECK_THROWS_AS(eval_F(p, {rat(1)}, {rat(2)}, {1, {1}}), std::domain_error);
    CHECK_THROWS_AS(eval_F(p, {rat(2), rat(2)}, {rat(3), rat(5)}, {2, {1, 2}}),
                    std::domain_error);
    CHECK_THROWS_AS(eval_F(p, {rat(2)}, {rat(1)}, {2, {1}}), std::invalid_argument);
}
