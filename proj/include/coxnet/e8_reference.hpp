#pragma once

#include <array>
#include <string>
#include <vector>

#include "coxnet/polynomial.hpp"

namespace coxnet {

/// The widely reproduced reference listing of the 93 E8 interval counts,
/// kept verbatim for diffing. It is NOT symmetric: index 5 is misprinted
/// (it shows 6 where the true coefficient, forced by the palindromic
/// generating function, is 4), and the listed values sum to 17282 instead
/// of 17280.
inline const std::array<long long, 93>& e8_reference_coefficients() {
    static const std::array<long long, 93> table{
        1,   1,   1,   2,   3,   6,   6,   8,   10,  13,  17,
        21,  26,  32,  38,  46,  55,  64,  74,  86,  98,  112,
        127, 142, 157, 175, 193, 211, 230, 249, 267, 287, 307,
        325, 343, 361, 377, 393, 409, 421, 432, 443, 452, 458,
        464, 466, 466, 466, 464,
        458, 452, 443, 432, 421, 409, 393, 377, 361, 343, 325,
        307, 287, 267, 249, 230, 211, 193, 175, 157, 142, 127,
        112, 98,  86,  74,  64,  55,  46,  38,  32,  26,  21,
        17,  13,  10,  8,   6,   4,   3,   2,   1,   1,   1};
    return table;
}

struct E8ReferenceDiff {
    int index;
    long long listed;
    Int computed;
};

/// Differences between the computed E8 generating function and the reference
/// listing. The expected output is exactly one entry, at index 5.
inline std::vector<E8ReferenceDiff> diff_e8_reference(const Polynomial& gf) {
    std::vector<E8ReferenceDiff> diffs;
    const auto& ref = e8_reference_coefficients();
    for (int i = 0; i < 93; ++i)
        if (gf.coeff(static_cast<std::size_t>(i)) != ref[static_cast<std::size_t>(i)])
            diffs.push_back({i, ref[static_cast<std::size_t>(i)],
                             gf.coeff(static_cast<std::size_t>(i))});
    return diffs;
}

}  // namespace coxnet
