#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rvertex {

/// Exact arbitrary-precision rational. Canonical (reduced) form is maintained
/// by GMP, so equality is plain comparison.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rat parse_rat(const std::string& text);

/// Canonical rendering: "p" for integers, "p/q" otherwise, q > 0.
std::string to_string(const Rat& r);

inline Rat inv(const Rat& r) {
    if (r == 0) throw std::domain_error("inverse of zero");
    return 1 / r;
}

/// r^e for any integer e (e < 0 requires r != 0).
Rat pow_int(const Rat& r, long e);

std::string to_string(const std::vector<Rat>& v);

}  // namespace rvertex
