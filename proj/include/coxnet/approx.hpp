#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "coxnet/errors.hpp"
#include "coxnet/polynomial.hpp"

namespace coxnet {

/// Exact moments of an integer-lattice cell distribution: mean, variance,
/// and the standardized fourth cumulant.
struct MomentSet {
    Rat mu;
    Rat sigma2;
    Rat kappa4;
};

/// Closed-form moments of the B_n interval distribution, i.e. of
/// U = sum_{j=1}^n j V_j with V_j iid Bernoulli(1/2):
/// mu = n(n+1)/4, sigma^2 = n(n+1)(2n+1)/24,
/// kappa4 = -(12/5)(3n^2+3n-1)/(n(n+1)(2n+1)).
inline MomentSet bn_moments(int n) {
    if (n < 1) throw Error("bn_moments needs n >= 1");
    const Rat nn(n);
    MomentSet m;
    m.mu = nn * (nn + 1) / 4;
    m.sigma2 = nn * (nn + 1) * (2 * nn + 1) / 24;
    m.kappa4 = Rat(-12, 5) * (3 * nn * nn + 3 * nn - 1) / (nn * (nn + 1) * (2 * nn + 1));
    return m;
}

/// Exact moments of the normalized cell distribution c_j / sum(c) of a
/// generating function with nonnegative coefficients.
inline MomentSet moments_from_gf(const Polynomial& gf) {
    const Int total = gf.sum_of_coefficients();
    if (gf.is_zero() || total <= 0) throw Error("moments need a nonzero distribution");
    Rat mean = 0;
    for (std::size_t j = 0; j < gf.coeffs().size(); ++j)
        mean += Rat(gf.coeffs()[j] * j, total);
    Rat m2 = 0, m4 = 0;
    for (std::size_t j = 0; j < gf.coeffs().size(); ++j) {
        const Rat d = Rat(static_cast<long long>(j)) - mean;
        const Rat d2 = d * d;
        m2 += Rat(gf.coeffs()[j], total) * d2;
        m4 += Rat(gf.coeffs()[j], total) * d2 * d2;
    }
    if (m2 == 0) throw Error("moments need a nondegenerate distribution");
    return {mean, m2, m4 / (m2 * m2) - 3};
}

/// Fourth Hermite polynomial, u^4 - 6u^2 + 3.
inline double hermite4(double u) {
    const double u2 = u * u;
    return u2 * u2 - 6.0 * u2 + 3.0;
}

/// Edgeworth approximation to the cell probabilities of a lattice
/// distribution: cell j gets phi(u_j) (1 + (kappa4/24) H4(u_j)) / sigma at
/// u_j = (j - mu)/sigma. No continuity correction and no renormalization;
/// the sum over cells is close to, but not exactly, one.
inline std::vector<double> edgeworth_cell_probs(double mu, double sigma2, double kappa4,
                                                int cell_count) {
    if (!(sigma2 > 0)) throw Error("edgeworth_cell_probs needs sigma2 > 0");
    if (cell_count < 1) throw Error("edgeworth_cell_probs needs at least one cell");
    const double sigma = std::sqrt(sigma2);
    const double norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
    std::vector<double> p(static_cast<std::size_t>(cell_count));
    for (int j = 0; j < cell_count; ++j) {
        const double u = (static_cast<double>(j) - mu) / sigma;
        p[static_cast<std::size_t>(j)] =
            norm * std::exp(-0.5 * u * u) * (1.0 + kappa4 / 24.0 * hermite4(u));
    }
    return p;
}

inline std::vector<double> edgeworth_cell_probs(const MomentSet& m, int cell_count) {
    return edgeworth_cell_probs(to_double(m.mu), to_double(m.sigma2), to_double(m.kappa4),
                                cell_count);
}

}  // namespace coxnet
