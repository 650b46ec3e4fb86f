#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "rvertex/cli.hpp"

using namespace rvertex;

namespace {

// wall-clock field varies between runs; everything else must be identical
std::string strip_elapsed(std::string s) {
    std::size_t pos = 0;
    while ((pos = s.find("\"elapsed_ms\":", pos)) != std::string::npos) {
        std::size_t end = pos + 13;
        while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) != 0))
            ++end;
        s.erase(pos, end - pos);
    }
    return s;
}

}  // namespace

TEST_CASE("argument parsing") {
    const RunConfig cfg = parse_args(
        {"verify", "--target", "theorem52", "--M", "3", "--N", "2", "--x", "1,3", "--seed", "5"});
    CHECK(cfg.command == Command::kVerify);
    CHECK(cfg.target == Target::kTheorem52);
    CHECK(cfg.M == 3);
    CHECK(cfg.N == 2);
    CHECK(cfg.x == std::vector<int>{1, 3});
    CHECK(cfg.seed == 5);
    CHECK(cfg.trials == 3);
    CHECK(cfg.output == OutputFormat::kJson);
    CHECK_FALSE(cfg.point.present);
}

TEST_CASE("parse errors name the offending flag") {
    CHECK_THROWS_AS(parse_args({"verify", "--x", "3,2"}), UsageError);
    CHECK_THROWS_AS(parse_args({"fly"}), UsageError);
    CHECK_THROWS_AS(parse_args({"verify", "--target", "bogus"}), UsageError);
    CHECK_THROWS_AS(parse_args({"verify", "--unknown"}), UsageError);
    CHECK_THROWS_AS(parse_args({"compute", "--target", "wavefunction", "--M", "1", "--N", "1",
                                "--a", "2", "--b", "3", "--z", "1/0", "--w", "1"}),
                    UsageError);
    // z = 1 sits on the z^4 = 1 locus
    CHECK_THROWS_AS(parse_args({"compute", "--target", "wavefunction", "--M", "1", "--N", "1",
                                "--a", "2", "--b", "3", "--z", "1", "--w", "2"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"verify", "--a", "2"}), UsageError);
}

TEST_CASE("rendering a config and reparsing reproduces it") {
    RunConfig cfg;
    cfg.command = Command::kCompute;
    cfg.target = Target::kSymfunc;
    cfg.M = 3;
    cfg.N = 2;
    cfg.x = {1, 3};
    cfg.seed = 99;
    cfg.trials = 5;
    cfg.output = OutputFormat::kText;
    cfg.point.present = true;
    cfg.point.a = rat(5, 2);
    cfg.point.b = rat(4, 3);
    cfg.point.z = {rat(3), rat(5, 7)};
    cfg.point.w = {rat(2), rat(1, 5), rat(6)};

    const RunConfig back = parse_args(render_args(cfg));
    CHECK(back.command == cfg.command);
    CHECK(back.target == cfg.target);
    CHECK(back.M == cfg.M);
    CHECK(back.N == cfg.N);
    CHECK(back.x == cfg.x);
    CHECK(back.seed == cfg.seed);
    CHECK(back.trials == cfg.trials);
    CHECK(back.output == cfg.output);
    CHECK(back.point.present);
    CHECK(back.point.a == cfg.point.a);
    CHECK(back.point.b == cfg.point.b);
    CHECK(back.point.z == cfg.point.z);
    CHECK(back.point.w == cfg.point.w);
}

TEST_CASE("environment variable provides the default seed") {
    setenv("REFLECT_VERTEX_SEED", "42", 1);
    CHECK(parse_args({"verify"}).seed == 42);
    CHECK(parse_args({"verify", "--seed", "3"}).seed == 3);
    setenv("REFLECT_VERTEX_SEED", "pony", 1);
    CHECK_THROWS_AS(parse_args({"verify"}), UsageError);
    unsetenv("REFLECT_VERTEX_SEED");
    CHECK(parse_args({"verify"}).seed == 0);
}

TEST_CASE("report serialization") {
    CHECK(emit_report({}, OutputFormat::kJson) == "[]");
    VerificationReport rep =
        make_report("demo", "demo reference", 4, "a=2", rat(1, 2), rat(1, 2), 0.25);
    const std::string json = emit_report({rep}, OutputFormat::kJson);
    CHECK(json ==
          R"([{"check_id":"demo","paper_ref":"demo reference","seed":4,"point":"a=2",)"
          R"("lhs":"1/2","rhs":"1/2","passed":true,"elapsed_ms":0}])");
    const std::string text = emit_report({rep}, OutputFormat::kText);
    CHECK(text.find("demo: PASS") != std::string::npos);
}

TEST_CASE("compute command prints the anchor value") {
    const RunConfig cfg = parse_args({"compute", "--target", "wavefunction", "--M", "1", "--N",
                                      "1", "--x", "1", "--a", "2", "--b", "3", "--z", "2",
                                      "--w", "1", "--output", "text"});
    std::ostringstream out;
    CHECK(run_command(cfg, out) == 0);
    CHECK(out.str() == "1275/8\n");

    const RunConfig cj = parse_args({"compute", "--target", "wavefunction", "--M", "1", "--N",
                                     "1", "--x", "1", "--a", "2", "--b", "3", "--z", "2",
                                     "--w", "1"});
    std::ostringstream jout;
    CHECK(run_command(cj, jout) == 0);
    CHECK(jout.str().find("\"1275/8\"") != std::string::npos);
}

TEST_CASE("verify command exit status and output stability") {
    const RunConfig cfg =
        parse_args({"verify", "--target", "theorem52", "--M", "3", "--N", "2", "--seed", "7",
                    "--trials", "2"});
    std::ostringstream first, second;
    CHECK(run_command(cfg, first) == 0);
    CHECK(run_command(cfg, second) == 0);
    CHECK(strip_elapsed(first.str()) == strip_elapsed(second.str()));
    CHECK(first.str().find("\"passed\":true") != std::string::npos);
}

TEST_CASE("a failing report turns into a nonzero exit status") {
    VerificationReport bad =
        make_report("demo", "demo reference", 0, "a=2", rat(1), rat(2), 0.0);
    CHECK(exit_status({bad}) == 1);
    bad.rhs = rat(1);
    bad.passed = true;
    CHECK(exit_status({bad}) == 0);
    CHECK(exit_status({}) == 0);
}

TEST_CASE("verify reports failure through the exit status") {
    // a corrupted target is simulated by checking pairing at mismatched sizes
    const RunConfig bad = parse_args({"verify", "--target", "pairing", "--M", "2", "--N",
                                      "1", "--a", "2", "--b", "3", "--z", "3", "--w", "5,6"});
    std::ostringstream out;
    CHECK_THROWS_AS(run_command(bad, out), UsageError);
}
