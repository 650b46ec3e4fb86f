#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvertex/rational.hpp"
#include "rvertex/report.hpp"

namespace rvertex {

enum class Command { kCompute, kVerify, kBench };

enum class Target {
    kWavefunction,
    kDual,
    kSymfunc,
    kDualSymfunc,
    kDwbcDet,
    kDwbcHom,
    kBetheF,
    kLemma,
    kProperties,
    kTheorem52,
    kPairing,
    kAll,
};

enum class OutputFormat { kJson, kText };

/// Explicit evaluation point supplied on the command line; validated against
/// the sampler's nonsingularity invariants at parse time.
struct PointOverride {
    bool present = false;
    Rat a;
    Rat b;
    std::vector<Rat> z;
    std::vector<Rat> w;
};

struct RunConfig {
    Command command = Command::kVerify;
    Target target = Target::kAll;
    int M = 3;
    int N = 1;
    std::vector<int> x;
    std::uint64_t seed = 0;
    PointOverride point;
    OutputFormat output = OutputFormat::kJson;
    int trials = 3;
};

/// Thrown on malformed command lines; maps to process exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_token(Target t);
std::string to_token(Command c);
std::string to_token(OutputFormat f);

/// Parses a full argument vector (without the program name). The default
/// seed is REFLECT_VERTEX_SEED when that environment variable is set, else 0.
/// Throws UsageError naming the offending flag.
RunConfig parse_args(const std::vector<std::string>& argv);

/// Textual rendering whose parse_args round trip reproduces the config.
std::vector<std::string> render_args(const RunConfig& cfg);

/// Serializes reports. JSON: top-level array of objects with keys check_id,
/// paper_ref, seed, point, lhs, rhs, passed, elapsed_ms; scalars as reduced
/// fraction strings. elapsed_ms is floored to whole milliseconds so output
/// is reproducible for sub-millisecond checks.
std::string emit_report(const std::vector<VerificationReport>& reports, OutputFormat format);

/// 0 when every report passed, 1 otherwise.
int exit_status(const std::vector<VerificationReport>& reports);

/// Executes the parsed command, writing results to `out`.
/// Returns the process exit status: 0 all passed, 1 some check failed.
int run_command(const RunConfig& cfg, std::ostream& out);

}  // namespace rvertex
