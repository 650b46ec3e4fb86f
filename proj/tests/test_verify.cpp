#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rvertex/sample.hpp"
#include "rvertex/verify.hpp"

using namespace rvertex;

TEST_CASE("summation identity checker") {
    SUBCASE("hand-evaluated two-column case") {
        const auto rep = check_lemma_identity({rat(2), rat(3)}, rat(3), {rat(5)}, 2);
        CHECK(rep.passed);
        CHECK(rep.lhs == rat(500, 3));
        CHECK(rep.rhs == rat(500, 3));
    }
    SUBCASE("x1=2 collapses to a single product-free term") {
        const SamplePoint pt = sample_point(151, 1, 1);
        const ModelParams p{pt.a, pt.b};
        const auto rep = check_lemma_identity(p, pt.z[0], pt.w, 2);
        const Rat a = pt.a, z = pt.z[0];
        CHECK(rep.lhs == (a * a - inv(a * a)) * (z * z - inv(z * z)) * pt.w[0]);
        CHECK(rep.passed);
    }
    SUBCASE("wide case and mutation detection") {
        const SamplePoint pt = sample_point(157, 5, 1);
        const ModelParams p{pt.a, pt.b};
        CHECK(check_lemma_identity(p, pt.z[0], pt.w, 6).passed);
        CHECK_FALSE(check_lemma_identity(p, pt.z[0], pt.w, 6, 0, Mutation::kScaleRhs).passed);
    }
}

TEST_CASE("oracle versus closed form checker") {
    SUBCASE("anchor point") {
        const auto rep =
            check_theorem_5_2({rat(2), rat(3)}, {rat(2)}, {rat(1)}, {1, {1}}, false);
        CHECK(rep.passed);
        CHECK(rep.lhs == rat(1275, 8));
    }
    SUBCASE("five sites, three particles") {
        const SamplePoint pt = sample_point(163, 5, 3);
        const ModelParams p{pt.a, pt.b};
        CHECK(check_theorem_5_2(p, pt.z, pt.w, {5, {2, 3, 5}}, false).passed);
        CHECK(check_theorem_5_2(p, pt.z, pt.w, {5, {1, 2, 5}}, true).passed);
        CHECK_FALSE(
            check_theorem_5_2(p, pt.z, pt.w, {5, {2, 3, 5}}, false, 0, Mutation::kScaleRhs)
                .passed);
    }
}

TEST_CASE("all characterization properties pass and their mutations fail") {
    const SamplePoint pt = sample_point(167, 4, 2);
    const ModelParams p{pt.a, pt.b};
    const OccupationConfig x{4, {1, 3}};
    for (bool dual : {false, true}) {
        const auto reports = check_properties(p, pt.z, pt.w, x, kAllProperties, dual);
        REQUIRE(reports.size() == 6);
        for (const auto& rep : reports) {
            INFO(rep.check_id);
            CHECK(rep.passed);
        }
        const auto corrupted =
            check_properties(p, pt.z, pt.w, x, kAllProperties, dual, 0, Mutation::kScaleRhs);
        for (const auto& rep : corrupted) {
            INFO(rep.check_id);
            CHECK_FALSE(rep.passed);
        }
    }
}

TEST_CASE("degree check reports the interpolated degree") {
    const SamplePoint pt = sample_point(173, 4, 2);
    const auto reports =
        check_properties({pt.a, pt.b}, pt.z, pt.w, {4, {1, 4}}, kDegree, false);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].lhs == 3);
    CHECK(reports[0].rhs == 3);
}

TEST_CASE("pairing checker") {
    SUBCASE("degenerate single-term sum") {
        const SamplePoint pt = sample_point(179, 1, 1);
        CHECK(check_pairing({pt.a, pt.b}, pt.z, pt.w, 1, false).passed);
    }
    SUBCASE("three-term sum") {
        const SamplePoint pt = sample_point(181, 3, 3);
        CHECK(check_pairing({pt.a, pt.b}, pt.z, pt.w, 1, false).passed);
    }
    SUBCASE("homogeneous six-term sum") {
        const SamplePoint pt = sample_point(191, 4, 4, kHomogeneousDet);
        CHECK(check_pairing({pt.a, pt.b}, pt.z, pt.w, 2, true).passed);
    }
    SUBCASE("mutation detection") {
        const SamplePoint pt = sample_point(181, 3, 3);
        CHECK_FALSE(check_pairing({pt.a, pt.b}, pt.z, pt.w, 1, false, 0, Mutation::kScaleRhs)
                        .passed);
    }
}

TEST_CASE("suite runner") {
    const auto reports = run_suite(7, {{3, 2}});
    CHECK(!reports.empty());
    for (const auto& rep : reports) {
        INFO(rep.check_id);
        CHECK(rep.passed);
        CHECK(rep.lhs == rep.rhs);
    }

    const auto rerun = run_suite(7, {{3, 2}});
    REQUIRE(rerun.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(rerun[i].check_id == reports[i].check_id);
        CHECK(rerun[i].seed == reports[i].seed);
        CHECK(rerun[i].point_summary == reports[i].point_summary);
        CHECK(rerun[i].lhs == reports[i].lhs);
        CHECK(rerun[i].rhs == reports[i].rhs);
    }

    CHECK(run_suite(7, {}).empty());
}
