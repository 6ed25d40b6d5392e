#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "coxnet/errors.hpp"
#include "coxnet/group_type.hpp"
#include "coxnet/numeric.hpp"

namespace coxnet {

/// Dense univariate polynomial over arbitrary-precision integers.
/// coeff(i) is the coefficient of q^i; the zero polynomial has no degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<int> coeffs) {
        for (int c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({1}); }

    /// 1 - q^k
    static Polynomial one_minus_power(int k) {
        std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
        c[0] = 1;
        c[static_cast<std::size_t>(k)] = -1;
        return Polynomial(std::move(c));
    }

    /// 1 + q^k
    static Polynomial one_plus_power(int k) {
        std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
        c[0] = 1;
        c[static_cast<std::size_t>(k)] = 1;
        return Polynomial(std::move(c));
    }

    /// The q-integer [k]_q = 1 + q + ... + q^{k-1}.
    static Polynomial q_integer(int k) {
        return Polynomial(std::vector<Int>(static_cast<std::size_t>(k), Int(1)));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 plays the role of "none" for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

    Int sum_of_coefficients() const {  // value at q = 1
        Int s = 0;
        for (const Int& c : coeffs_) s += c;
        return s;
    }

    bool is_palindromic() const {
        for (std::size_t i = 0, j = coeffs_.size(); i < j; ++i)
            if (coeffs_[i] != coeffs_[j - 1 - i]) return false;
        return true;
    }

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

    Polynomial operator+(const Polynomial& r) const {
        std::vector<Int> c(std::max(coeffs_.size(), r.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) c[i] += r.coeffs_[i];
        return Polynomial(std::move(c));
    }

    Polynomial operator-(const Polynomial& r) const {
        std::vector<Int> c(std::max(coeffs_.size(), r.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) c[i] -= r.coeffs_[i];
        return Polynomial(std::move(c));
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        os << "(";
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            os << (i ? "," : "") << p.coeffs_[i];
        return os << ")";
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Convolution product.
inline Polynomial multiply(const Polynomial& p, const Polynomial& r) {
    if (p.is_zero() || r.is_zero()) return Polynomial::zero();
    std::vector<Int> c(p.coeffs().size() + r.coeffs().size() - 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < r.coeffs().size(); ++j)
            c[i + j] += p.coeffs()[i] * r.coeffs()[j];
    return Polynomial(std::move(c));
}

inline Polynomial operator*(const Polynomial& p, const Polynomial& r) { return multiply(p, r); }

/// Exact quotient over the integers. Classical long division, high terms
/// first; throws NonExactDivision if any remainder coefficient is nonzero.
inline Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw NonExactDivision("division by the zero polynomial");
    if (num.is_zero()) return Polynomial::zero();
    if (num.degree() < den.degree())
        throw NonExactDivision("numerator degree below denominator degree");

    std::vector<Int> rem = num.coeffs();
    const std::vector<Int>& d = den.coeffs();
    const Int lead = d.back();
    std::vector<Int> quot(rem.size() - d.size() + 1, Int(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int top = rem[i + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw NonExactDivision("leading coefficient does not divide");
        Int f = top / lead;
        quot[i] = f;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * d[j];
    }
    for (const Int& c : rem)
        if (c != 0) throw NonExactDivision("nonzero remainder");
    return Polynomial(std::move(quot));
}

/// Basic invariant degrees d_1 <= ... <= d_m of the group.
struct DegreeList {
    std::vector<int> degrees;
};

inline DegreeList degrees(const GroupType& g) {
    std::vector<int> d;
    switch (g.family()) {
        case Family::A:  // 2, 3, ..., n+1
            for (int i = 2; i <= g.rank() + 1; ++i) d.push_back(i);
            break;
        case Family::B:  // 2, 4, ..., 2n
            for (int i = 1; i <= g.rank(); ++i) d.push_back(2 * i);
            break;
        case Family::D:  // 2, 4, ..., 2n-2 together with n
            for (int i = 1; i < g.rank(); ++i) d.push_back(2 * i);
            d.push_back(g.rank());
            std::sort(d.begin(), d.end());
            break;
        case Family::E:
            if (g.rank() == 6) d = {2, 5, 6, 8, 9, 12};
            else if (g.rank() == 7) d = {2, 6, 8, 10, 12, 14, 18};
            else d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
    }
    return DegreeList{std::move(d)};
}

/// Length generating function of the group by the Chevalley factorization:
/// the product over degrees of (1 - q^{d_j})/(1 - q). Coefficients sum to
/// the group order.
inline Polynomial poincare_polynomial(const GroupType& g) {
    Polynomial p = Polynomial::one();
    for (int d : degrees(g).degrees) p = p * Polynomial::q_integer(d);
    return p;
}

/// Interval frequency generating function of the confidence net:
/// prod_j (1 - q^{d_j}) divided (exactly) by prod_{i=1}^n (1 - q^i),
/// n the rank. Coefficients are the per-interval counts n_j; their sum is
/// the index of the symmetric group, prod d_j / n!.
inline Polynomial net_generating_function(const GroupType& g) {
    Polynomial num = Polynomial::one();
    for (int d : degrees(g).degrees) num = num * Polynomial::one_minus_power(d);
    Polynomial den = Polynomial::one();
    for (int i = 1; i <= g.rank(); ++i) den = den * Polynomial::one_minus_power(i);
    Polynomial gf = divide_exact(num, den);
    for (const Int& c : gf.coeffs())
        if (c < 0) throw Error("internal: net generating function has a negative coefficient");
    return gf;
}

}  // namespace coxnet
