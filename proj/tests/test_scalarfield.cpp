#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rvertex/determinant.hpp"
#include "rvertex/polynomial.hpp"
#include "rvertex/rational.hpp"
#include "rvertex/sample.hpp"

using namespace rvertex;

TEST_CASE("rational parse and render") {
    CHECK(parse_rat("3/4") == rat(3, 4));
    CHECK(parse_rat("-6/8") == rat(-3, 4));
    CHECK(parse_rat("7") == rat(7));
    CHECK(to_string(rat(-3, 4)) == "-3/4");
    CHECK(to_string(rat(14, 7)) == "2");
    CHECK(parse_rat(to_string(rat(123456789, 987654321))) == rat(123456789, 987654321));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("pow_int handles negative exponents") {
    CHECK(pow_int(rat(2, 3), 3) == rat(8, 27));
    CHECK(pow_int(rat(2, 3), -2) == rat(9, 4));
    CHECK(pow_int(rat(5), 0) == 1);
    CHECK_THROWS(pow_int(rat(0), -1));
}

TEST_CASE("interpolation worked examples") {
    CHECK(interpolate_univariate({{rat(1), rat(2)}, {rat(2), rat(3)}, {rat(3), rat(4)}}) ==
          std::vector<Rat>{rat(1), rat(1)});
    CHECK(interpolate_univariate({{rat(1), rat(5)}}) == std::vector<Rat>{rat(5)});
    CHECK(interpolate_univariate(
              {{rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(8)}, {rat(-1), rat(-1)}}) ==
          std::vector<Rat>{rat(0), rat(0), rat(0), rat(1)});
    CHECK_THROWS_AS(interpolate_univariate({{rat(1), rat(1)}, {rat(1), rat(2)}}),
                    std::invalid_argument);
}

TEST_CASE("interpolation recovers a random degree-d polynomial exactly") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int d = 0; d <= 6; ++d) {
        std::vector<Rat> poly(d + 1);
        for (auto& c : poly) c = rat(coeff(rng), 1 + std::abs(coeff(rng)));
        poly.back() = poly.back() == 0 ? rat(1) : poly.back();
        std::vector<std::pair<Rat, Rat>> samples;
        for (int t = 0; t <= d; ++t) samples.emplace_back(rat(t), eval_poly(poly, rat(t)));
        CHECK(interpolate_univariate(samples) == poly);
    }
}

TEST_CASE("determinant worked examples") {
    CHECK(det_exact({{rat(7, 2)}}) == rat(7, 2));
    CHECK(det_exact({{rat(1), rat(2)}, {rat(3), rat(4)}}) == rat(-2));
    Matrix hilbert(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) hilbert[i][j] = rat(1, i + j + 1);
    CHECK(det_exact(hilbert) == rat(1, 2160));
    CHECK(det_exact({{rat(1), rat(2)}, {rat(2), rat(4)}}) == 0);
}

TEST_CASE("determinant changes sign under row swap, both algorithm branches") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int n : {4, 6}) {
        for (int trial = 0; trial < 20; ++trial) {
            Matrix m(n, std::vector<Rat>(n));
            for (auto& row : m)
                for (auto& e : row) e = rat(num(rng), 1 + std::abs(num(rng)));
            const Rat d = det_exact(m);
            Matrix swapped = m;
            std::swap(swapped[0], swapped[n - 1]);
            CHECK(det_exact(swapped) == -d);
        }
    }
}

TEST_CASE("sampled points are deterministic and satisfy every invariant") {
    const SamplePoint p1 = sample_point(1, 1, 1);
    const SamplePoint p2 = sample_point(1, 1, 1);
    CHECK(p1.a == p2.a);
    CHECK(p1.b == p2.b);
    CHECK(p1.z == p2.z);
    CHECK(p1.w == p2.w);
    CHECK(satisfies_invariants(p1));

    const SamplePoint p3 = sample_point(2, 4, 2);
    CHECK(satisfies_invariants(p3));
    CHECK(p3.z[0] != p3.z[1]);
    CHECK(p3.z[0] != -p3.z[1]);
    CHECK(p3.z[0] != inv(p3.z[1]));
    CHECK(p3.z[0] != -inv(p3.z[1]));

    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const unsigned flags = (seed % 3 == 1)   ? kHomogeneousDet
                               : (seed % 3 == 2) ? kBetheMomenta
                                                 : kCore;
        CHECK(satisfies_invariants(sample_point(seed, 3, 2, flags), flags));
    }
}
