#pragma once

#include <cstdint>
#include <string>

#include "rvertex/rational.hpp"

namespace rvertex {

/// Outcome of one identity check at one parameter point. Pass/fail is
/// exact scalar equality; no tolerances exist anywhere.
struct VerificationReport {
    std::string check_id;
    std::string paper_ref;
    std::uint64_t seed = 0;
    std::string point_summary;
    Rat lhs;
    Rat rhs;
    bool passed = false;
    double elapsed_ms = 0.0;
};

inline VerificationReport make_report(std::string check_id, std::string ref,
                                      std::uint64_t seed, std::string point, Rat lhs,
                                      Rat rhs, double elapsed_ms) {
    VerificationReport r;
    r.check_id = std::move(check_id);
    r.paper_ref = std::move(ref);
    r.seed = seed;
    r.point_summary = std::move(point);
    r.passed = (lhs == rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.elapsed_ms = elapsed_ms;
    return r;
}

/// Test hook: checkers multiply their right-hand side by 2 when asked,
/// so vacuous always-pass checks are detectable.
enum class Mutation { kNone, kScaleRhs };

inline Rat mutate(Rat rhs, Mutation m) {
    return m == Mutation::kScaleRhs ? Rat(2) * rhs : rhs;
}

}  // namespace rvertex
