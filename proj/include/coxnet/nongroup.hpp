#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "coxnet/net.hpp"
#include "coxnet/polynomial.hpp"

namespace coxnet {

/// Interval frequencies for the congruent-cone partition built from the long
/// diagonal and the principal axes: (1+q)(1+q^2)^{n-1}. Not a reflection
/// group; the 2n interval weights still sum to 2^n.
inline Polynomial nongroup_gf(int n) {
    if (n < 1) throw Error("nongroup_gf needs n >= 1");
    Polynomial p = Polynomial::one_plus_power(1);
    for (int i = 1; i < n; ++i) p = p * Polynomial::one_plus_power(2);
    return p;
}

/// Net of 2n intervals whose boundaries are the order statistics together
/// with the means of adjacent order statistics.
struct NonGroupNet {
    int n;
    std::vector<double> boundaries;
    std::vector<Rat> probs;
    std::vector<std::string> merged;
    std::vector<Int> gf;
};

inline NonGroupNet nongroup_net(const Sample& y) {
    const int n = static_cast<int>(y.values.size());
    if (n < 1) throw DimensionMismatch("empty sample");
    for (double v : y.values)
        if (!std::isfinite(v)) throw DimensionMismatch("sample contains a non-finite value");

    std::vector<double> sorted = y.values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> theta;
    for (int i = 0; i < n; ++i) {
        theta.push_back(sorted[static_cast<std::size_t>(i)]);
        if (i + 1 < n)
            theta.push_back(0.5 * (sorted[static_cast<std::size_t>(i)] +
                                   sorted[static_cast<std::size_t>(i) + 1]));
    }

    const Polynomial gf = nongroup_gf(n);
    NonGroupNet net;
    net.n = n;
    net.gf = gf.coeffs();
    ConfidenceNet scratch;
    detail::merge_boundaries(std::move(theta), gf.coeffs(), gf.sum_of_coefficients(), scratch);
    net.boundaries = std::move(scratch.boundaries);
    net.probs = std::move(scratch.probs);
    net.merged = std::move(scratch.merged);
    return net;
}

}  // namespace coxnet
