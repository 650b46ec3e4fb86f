#include "rvertex/polynomial.hpp"

#include <stdexcept>

namespace rvertex {

std::vector<Rat> interpolate_univariate(const std::vector<std::pair<Rat, Rat>>& samples) {
    const std::size_t n = samples.size();
    if (n == 0) throw std::invalid_argument("interpolate_univariate: no samples");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("interpolate_univariate: duplicate abscissae");

    // Newton divided differences, then expansion to the power basis.
    std::vector<Rat> diffs(n);
    for (std::size_t i = 0; i < n; ++i) diffs[i] = samples[i].second;
    std::vector<Rat> newton(n);
    newton[0] = diffs[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            diffs[i] = (diffs[i] - diffs[i - 1]) /
                       (samples[i].first - samples[i - level].first);
        }
        newton[level] = diffs[level];
    }

    // p(t) = c_{n-1}; p = p*(t - x_k) + c_k for k = n-2 .. 0
    std::vector<Rat> coeffs{newton[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        coeffs.insert(coeffs.begin(), Rat(0));
        const Rat& xk = samples[k].first;
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) coeffs[i] -= xk * coeffs[i + 1];
        coeffs[0] += newton[k];
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& t) {
    Rat acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

}  // namespace rvertex
