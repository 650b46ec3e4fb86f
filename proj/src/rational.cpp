#include "rvertex/rational.hpp"

#include <sstream>

namespace rvertex {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rat(n);
        }
        mpz_class n(text.substr(0, slash));
        mpz_class d(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        Rat r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    }
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat pow_int(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    const bool neg = e < 0;
    unsigned long mag = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat base = neg ? inv(r) : r;
    Rat acc(1);
    while (mag != 0) {
        if (mag & 1u) acc *= base;
        base *= base;
        mag >>= 1u;
    }
    return acc;
}

std::string to_string(const std::vector<Rat>& v) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << to_string(v[i]);
    }
    out << "]";
    return out.str();
}

}  // namespace rvertex
