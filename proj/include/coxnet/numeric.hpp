#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

#include "coxnet/errors.hpp"

namespace coxnet {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;

inline double to_double(const Rat& r) { return static_cast<double>(r); }

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec operator*(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

/// Scale a rational vector to primitive integer form: clear denominators,
/// divide by the gcd of the entries. The zero vector is returned unchanged.
inline RatVec primitive_integer_scale(const RatVec& v) {
    Int lcm_den = 1;
    for (const Rat& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    Int g = 0;
    std::vector<Int> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    if (g == 0) return v;
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
    return out;
}

/// Solve A·x = b exactly by Gaussian elimination, A square and nonsingular.
inline RatVec solve_linear(std::vector<RatVec> a, RatVec b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("solve_linear: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Kernel of a rectangular rational matrix (rows × cols), required to be
/// exactly one-dimensional; returns a spanning vector in primitive integer
/// form. Throws DegenerateParabolic otherwise.
inline RatVec kernel_vector(std::vector<RatVec> m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == r || m[row][c] == 0) continue;
            Rat f = m[row][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[row][k] -= f * m[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (cols - pivot_col.size() != 1)
        throw DegenerateParabolic("orthogonality system kernel is not one-dimensional");

    // the single free column gets value 1, pivots back-substitute
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    RatVec x(cols, Rat(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        const std::size_t c = pivot_col[i];
        x[c] = -m[i][free_col] / m[i][c];
    }
    return primitive_integer_scale(x);
}

}  // namespace coxnet
