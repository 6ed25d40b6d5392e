#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "coxnet/errors.hpp"
#include "coxnet/polynomial.hpp"
#include "coxnet/root_system.hpp"

namespace coxnet {

/// Observed data; length must match the ambient dimension of the group's
/// realization (rank+1 for A_n, 8 for the E types, rank otherwise).
struct Sample {
    std::vector<double> values;
};

/// Two boundaries closer than this relative tolerance coalesce.
inline constexpr double boundary_tie_tolerance = 1e-9;

/// A confidence net for a location parameter: sorted interval boundaries,
/// one exact rational coverage probability per interval, and warnings for
/// any boundary coalescences. Intervals are (-inf, b_1], [b_1, b_2], ...,
/// [b_{N-1}, +inf); shared endpoints carry probability zero.
struct ConfidenceNet {
    std::string group_label;
    std::vector<double> boundaries;
    std::vector<Rat> probs;
    std::vector<std::string> merged;
    std::vector<Int> gf;  // interval counts before any coalescence
};

namespace detail {

inline bool boundaries_tie(double a, double b) {
    return std::abs(a - b) <= boundary_tie_tolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Sort raw boundary values, coalesce ties (chained), and fold the interval
/// weights: a degenerate interval between tied boundaries joins the interval
/// ending at the tied value, matching the boundary-hit convention of
/// covering_interval. weights has one entry per unmerged interval
/// (raw.size() + 1 of them).
inline void merge_boundaries(std::vector<double> raw, const std::vector<Int>& weights,
                             const Int& total, ConfidenceNet& out) {
    std::sort(raw.begin(), raw.end());
    const std::size_t k = raw.size();
    std::vector<int> cluster(k, 0);
    std::vector<double> reps;
    std::size_t i = 0;
    while (i < k) {
        std::size_t j = i + 1;
        while (j < k && boundaries_tie(raw[j - 1], raw[j])) ++j;
        double rep = 0;
        for (std::size_t t = i; t < j; ++t) rep += raw[t];
        rep /= static_cast<double>(j - i);
        for (std::size_t t = i; t < j; ++t) cluster[t] = static_cast<int>(reps.size());
        if (j - i > 1) {
            std::ostringstream w;
            w << "merged " << (j - i) << " coinciding boundaries at " << rep;
            out.merged.push_back(w.str());
        }
        reps.push_back(rep);
        i = j;
    }
    out.boundaries = std::move(reps);
    out.probs.assign(out.boundaries.size() + 1, Rat(0));
    for (std::size_t j = 0; j <= k; ++j) {
        const std::size_t m = (j < k) ? static_cast<std::size_t>(cluster[j]) : out.boundaries.size();
        out.probs[m] += Rat(weights[j], total);
    }
}

inline void check_sample(const RootSystem& rs, const Sample& y) {
    if (static_cast<int>(y.values.size()) != rs.ambient_dim)
        throw DimensionMismatch(rs.group.name() + " expects samples of length " +
                                std::to_string(rs.ambient_dim) + ", got " +
                                std::to_string(y.values.size()));
    for (double v : y.values)
        if (!std::isfinite(v)) throw DimensionMismatch("sample contains a non-finite value");
    if (rs.rank() == rs.ambient_dim) return;  // span is everything
    double scale = 1.0, resid = 0.0;
    for (double v : y.values) scale = std::max(scale, std::abs(v));
    for (int r = 0; r < rs.ambient_dim; ++r) {
        double p = 0;
        for (int c = 0; c < rs.ambient_dim; ++c) p += rs.span_projection_d[r][c] * y.values[c];
        resid = std::max(resid, std::abs(p - y.values[r]));
    }
    if (resid > 1e-9 * scale)
        throw DimensionMismatch(rs.group.name() + " sample must lie in the span of the roots "
                                "(off-span residual " + std::to_string(resid) + ")");
}

/// theta values cut out by the live roots: a^T y / a^T v.
inline std::vector<double> raw_boundaries(const RootSystem& rs, const Sample& y) {
    check_sample(rs, y);
    std::vector<double> theta;
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        if (rs.root_dot_ray[r] == 0) continue;
        double num = 0;
        for (int c = 0; c < rs.ambient_dim; ++c) num += rs.positive_roots_d[r][c] * y.values[c];
        theta.push_back(num / to_double(rs.root_dot_ray[r]));
    }
    return theta;
}

}  // namespace detail

/// Net boundaries for the sample: sorted, with near-coincident values merged.
inline std::vector<double> boundaries(const RootSystem& rs, const Sample& y) {
    std::vector<double> theta = detail::raw_boundaries(rs, y);
    const std::size_t k = theta.size();
    ConfidenceNet tmp;
    detail::merge_boundaries(std::move(theta), std::vector<Int>(k + 1, Int(1)),
                             Int(static_cast<long long>(k) + 1), tmp);
    return tmp.boundaries;
}

inline std::vector<double> boundaries(const GroupType& g, const Sample& y) {
    return boundaries(build_root_system(g), y);
}

inline ConfidenceNet confidence_net(const RootSystem& rs, const Sample& y) {
    std::vector<double> theta = detail::raw_boundaries(rs, y);
    const Polynomial gf = net_generating_function(rs.group);
    if (static_cast<int>(theta.size()) != gf.degree())
        throw Error("internal: live root count disagrees with generating function degree");
    ConfidenceNet net;
    net.group_label = rs.group.name();
    net.gf = gf.coeffs();
    net.merged = rs.warnings;
    detail::merge_boundaries(std::move(theta), gf.coeffs(), gf.sum_of_coefficients(), net);
    return net;
}

inline ConfidenceNet confidence_net(const GroupType& g, const Sample& y) {
    return confidence_net(build_root_system(g), y);
}

/// Index of the interval covering theta, with its exact probability.
/// Boundary hits go to the interval on the left (shared endpoints have
/// coverage probability zero either way).
inline std::pair<int, Rat> covering_interval(const ConfidenceNet& net, double theta) {
    const auto it = std::lower_bound(net.boundaries.begin(), net.boundaries.end(), theta);
    const int idx = static_cast<int>(it - net.boundaries.begin());
    return {idx, net.probs[static_cast<std::size_t>(idx)]};
}

struct CentralCoverage {
    int lo_index;
    int hi_index;
    Rat achieved_prob;
};

/// Trim outer intervals while keeping total coverage at least 1 - alpha:
/// repeatedly drop whichever end interval has the smaller probability
/// (ties drop the left end), stopping when another drop would fall below
/// the target.
inline CentralCoverage central_coverage_set(const std::vector<Rat>& probs, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie strictly between 0 and 1");
    const Rat target = Rat(1) - Rat(alpha);
    int lo = 0, hi = static_cast<int>(probs.size()) - 1;
    Rat total = 1;
    while (lo < hi) {
        const bool drop_left = probs[lo] <= probs[hi];
        const Rat& cand = drop_left ? probs[lo] : probs[hi];
        if (total - cand < target) break;
        total -= cand;
        if (drop_left) ++lo; else --hi;
    }
    return {lo, hi, total};
}

inline CentralCoverage central_coverage_set(const ConfidenceNet& net, double alpha) {
    return central_coverage_set(net.probs, alpha);
}

/// The subsample-mean net: boundaries are the 2^n - 1 means over nonempty
/// subsets of the sample, each of the 2^n intervals carrying probability
/// 2^{-n} (coalesced intervals sum).
inline ConfidenceNet hartigan_net(const Sample& y, int limit = 20) {
    const int n = static_cast<int>(y.values.size());
    if (n < 1) throw DimensionMismatch("empty sample");
    if (n > limit)
        throw SampleTooLarge("subset-mean net over " + std::to_string(n) +
                             " observations needs 2^" + std::to_string(n) +
                             " - 1 boundaries (limit " + std::to_string(limit) + ")");
    for (double v : y.values)
        if (!std::isfinite(v)) throw DimensionMismatch("sample contains a non-finite value");
    const std::size_t m = std::size_t(1) << n;
    std::vector<double> sums(m, 0.0);
    std::vector<double> theta;
    theta.reserve(m - 1);
    for (std::size_t mask = 1; mask < m; ++mask) {
        const int low = std::countr_zero(mask);
        sums[mask] = sums[mask & (mask - 1)] + y.values[static_cast<std::size_t>(low)];
        theta.push_back(sums[mask] / static_cast<double>(std::popcount(mask)));
    }
    ConfidenceNet net;
    net.group_label = "hartigan" + std::to_string(n);
    net.gf.assign(m, Int(1));
    detail::merge_boundaries(std::move(theta), net.gf, Int(static_cast<long long>(m)), net);
    return net;
}

}  // namespace coxnet
