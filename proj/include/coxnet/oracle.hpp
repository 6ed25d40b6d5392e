#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <unordered_map>
#include <vector>

#include "coxnet/errors.hpp"
#include "coxnet/net.hpp"
#include "coxnet/polynomial.hpp"
#include "coxnet/root_system.hpp"

namespace coxnet {

inline constexpr long long default_enumeration_limit = 5'000'000;
inline constexpr int max_enumeration_rank = 16;

/// A group element, stored by its action on the simple roots: images[j] is
/// the signed positive-root index (+-(i+1)) of w(alpha_j). This determines
/// the whole orthogonal transformation, since w is the identity on the
/// orthogonal complement of the root span; the full matrix is materialized
/// by element_matrix. Unused slots beyond the rank are zero so the array
/// doubles as a hash key.
struct GroupElement {
    std::array<std::int8_t, max_enumeration_rank> images{};

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& e) const {
        std::uint64_t a, b;
        std::memcpy(&a, e.images.data(), 8);
        std::memcpy(&b, e.images.data() + 8, 8);
        std::uint64_t h = a * 0x9E3779B97F4A7C15ull;
        h ^= (b + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2)) * 0xBF58476D1CE4E5B9ull;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

/// Length (or coset-length) frequency counts, indexed by length.
struct LengthHistogram {
    std::vector<long long> counts;

    friend bool operator==(const LengthHistogram&, const LengthHistogram&) = default;
};

inline Polynomial to_polynomial(const LengthHistogram& h) {
    std::vector<Int> c;
    c.reserve(h.counts.size());
    for (long long x : h.counts) c.emplace_back(x);
    return Polynomial(std::move(c));
}

namespace detail {

inline GroupElement identity_element(const RootSystem& rs) {
    GroupElement e;
    for (int j = 0; j < rs.rank(); ++j) e.images[j] = static_cast<std::int8_t>(j + 1);
    return e;
}

inline std::int16_t apply_signed(const std::vector<std::int16_t>& table, int signed_idx) {
    return signed_idx > 0 ? table[signed_idx - 1]
                          : static_cast<std::int16_t>(-table[-signed_idx - 1]);
}

/// Left-multiply by the i-th simple reflection: (s_i w)(a) = s_i(w(a)).
inline GroupElement left_multiply_generator(const RootSystem& rs, int i, const GroupElement& w) {
    GroupElement out;
    for (int j = 0; j < rs.rank(); ++j)
        out.images[j] = static_cast<std::int8_t>(apply_signed(rs.refl_table[i], w.images[j]));
    return out;
}

inline void check_enumerable(const RootSystem& rs, long long limit) {
    const Int order = rs.group.order();
    if (order > limit)
        throw GroupTooLarge(rs.group.name() + " has order " + order.str() +
                            ", above the enumeration limit " + std::to_string(limit));
    if (rs.rank() > max_enumeration_rank || rs.positive_roots.size() > 126)
        throw GroupTooLarge(rs.group.name() + " is too large for the packed element encoding");
}

}  // namespace detail

/// Every group element together with its Coxeter length (Cayley-graph
/// distance from the identity, simple reflections as generators), found by
/// breadth-first closure. Element order is deterministic.
struct Enumeration {
    std::vector<GroupElement> elements;
    std::vector<int> lengths;
    std::unordered_map<GroupElement, int, GroupElementHash> index;
};

inline Enumeration enumerate_group(const RootSystem& rs,
                                   long long limit = default_enumeration_limit) {
    detail::check_enumerable(rs, limit);
    Enumeration en;
    const GroupElement id = detail::identity_element(rs);
    en.elements.push_back(id);
    en.lengths.push_back(0);
    en.index.emplace(id, 0);
    for (std::size_t head = 0; head < en.elements.size(); ++head) {
        const GroupElement w = en.elements[head];
        const int len = en.lengths[head];
        for (int i = 0; i < rs.rank(); ++i) {
            GroupElement next = detail::left_multiply_generator(rs, i, w);
            if (en.index.emplace(next, static_cast<int>(en.elements.size())).second) {
                en.elements.push_back(next);
                en.lengths.push_back(len + 1);
            }
        }
    }
    if (Int(static_cast<long long>(en.elements.size())) != rs.group.order())
        throw Error("internal: closure found " + std::to_string(en.elements.size()) +
                    " elements, expected " + rs.group.order().str());
    return en;
}

inline std::vector<GroupElement> enumerate_elements(const RootSystem& rs,
                                                    long long limit = default_enumeration_limit) {
    return enumerate_group(rs, limit).elements;
}

inline LengthHistogram length_histogram(const Enumeration& en) {
    LengthHistogram h;
    for (int len : en.lengths) {
        if (len >= static_cast<int>(h.counts.size())) h.counts.resize(len + 1, 0);
        ++h.counts[len];
    }
    return h;
}

inline LengthHistogram length_histogram(const RootSystem& rs,
                                        long long limit = default_enumeration_limit) {
    return length_histogram(enumerate_group(rs, limit));
}

inline LengthHistogram length_histogram(const GroupType& g,
                                        long long limit = default_enumeration_limit) {
    return length_histogram(build_root_system(g), limit);
}

namespace detail {

/// The coset of the symmetric-group parabolic W_J w is determined exactly by
/// w^{-1}v, and hence by the inner products v.(w alpha_j) for all j (the
/// stabilizer of v is W_J because the roots orthogonal to v are exactly the
/// parabolic subsystem). Doubling makes the entries integers.
inline GroupElement coset_key(const RootSystem& rs, const std::vector<long long>& two_v_dot,
                              const GroupElement& w) {
    GroupElement key;
    for (int j = 0; j < rs.rank(); ++j) {
        const int s = w.images[j];
        const long long val = s > 0 ? two_v_dot[s - 1] : -two_v_dot[-s - 1];
        if (val < -127 || val > 127)
            throw GroupTooLarge("coset key entry out of packed range");
        key.images[j] = static_cast<std::int8_t>(val);
    }
    return key;
}

inline std::vector<long long> two_v_dot_roots(const RootSystem& rs) {
    std::vector<long long> out(rs.positive_roots.size());
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        const Rat twice = 2 * rs.root_dot_ray[r];
        if (denominator(twice) != 1) throw Error("internal: 2 v.a is not an integer");
        out[r] = static_cast<long long>(numerator(twice));
    }
    return out;
}

}  // namespace detail

/// Minimum Coxeter length in each coset of the symmetric-group parabolic,
/// histogrammed. The minimal element of each coset is checked to be unique.
/// Equals the net generating function coefficients.
inline LengthHistogram coset_min_length_histogram(const RootSystem& rs,
                                                  const Enumeration& en) {
    const std::vector<long long> two_v_dot = detail::two_v_dot_roots(rs);

    struct CosetStat {
        int min_len = -1;
        int at_min = 0;
        long long size = 0;
    };
    std::unordered_map<GroupElement, CosetStat, GroupElementHash> cosets;
    for (std::size_t i = 0; i < en.elements.size(); ++i) {
        CosetStat& st = cosets[detail::coset_key(rs, two_v_dot, en.elements[i])];
        ++st.size;
        if (st.min_len < 0 || en.lengths[i] < st.min_len) {
            st.min_len = en.lengths[i];
            st.at_min = 1;
        } else if (en.lengths[i] == st.min_len) {
            ++st.at_min;
        }
    }

    long long parabolic_order = 1;
    for (int i = 2; i <= rs.group.rank(); ++i) parabolic_order *= i;

    LengthHistogram h;
    for (const auto& [key, st] : cosets) {
        if (st.at_min != 1)
            throw Error("internal: coset minimal-length element is not unique");
        if (st.size != parabolic_order)
            throw Error("internal: coset size differs from the parabolic order");
        if (st.min_len >= static_cast<int>(h.counts.size())) h.counts.resize(st.min_len + 1, 0);
        ++h.counts[st.min_len];
    }
    return h;
}

inline LengthHistogram coset_min_length_histogram(const RootSystem& rs,
                                                  long long limit = default_enumeration_limit) {
    return coset_min_length_histogram(rs, enumerate_group(rs, limit));
}

inline LengthHistogram coset_min_length_histogram(const GroupType& g,
                                                  long long limit = default_enumeration_limit) {
    return coset_min_length_histogram(build_root_system(g), limit);
}

/// Histogram of psi(x) = sum_i i*x_i over sign vectors x in {0,1}^n: the
/// elementary count of which boundaries sit below theta for the
/// sign-change groups. Enumerated directly for n <= 20, by convolution of
/// the two-point factors above that.
inline LengthHistogram sign_vector_histogram_B(int n) {
    if (n < 0 || n > 30) throw Error("sign vector histogram supports 0 <= n <= 30");
    LengthHistogram h;
    h.counts.assign(static_cast<std::size_t>(n) * (n + 1) / 2 + 1, 0);
    if (n <= 20) {
        const std::uint64_t m = std::uint64_t(1) << n;
        for (std::uint64_t mask = 0; mask < m; ++mask) {
            int psi = 0;
            for (int i = 0; i < n; ++i)
                if (mask & (std::uint64_t(1) << i)) psi += i + 1;
            ++h.counts[psi];
        }
    } else {
        Polynomial p = Polynomial::one();
        for (int i = 1; i <= n; ++i) p = p * Polynomial::one_plus_power(i);
        for (std::size_t i = 0; i < h.counts.size(); ++i)
            h.counts[i] = static_cast<long long>(p.coeff(i));
    }
    return h;
}

/// Same counter over {0,1}^{n-1}, the even-sign-change variant.
inline LengthHistogram sign_vector_histogram_D(int n) {
    if (n < 2) throw Error("D-type sign vector histogram needs n >= 2");
    return sign_vector_histogram_B(n - 1);
}

// --- exact element arithmetic (small-group utility layer) ---

/// Images of every positive root under w, as signed indices.
inline std::vector<std::int16_t> full_action(const RootSystem& rs, const GroupElement& w) {
    std::vector<std::int16_t> out(rs.positive_roots.size());
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        RatVec image(rs.ambient_dim, Rat(0));
        for (int j = 0; j < rs.rank(); ++j) {
            const Rat c(rs.root_simple_coords[r][j]);
            if (c == 0) continue;
            const int s = w.images[j];
            const RatVec& root = rs.positive_roots[std::abs(s) - 1];
            image = image + (s > 0 ? c : -c) * root;
        }
        const int signed_idx = rs.signed_root_index(image);
        if (signed_idx == 0) throw Error("internal: element does not preserve the root set");
        out[r] = static_cast<std::int16_t>(signed_idx);
    }
    return out;
}

inline GroupElement compose(const RootSystem& rs, const GroupElement& u, const GroupElement& w) {
    const std::vector<std::int16_t> u_full = full_action(rs, u);
    GroupElement out;
    for (int j = 0; j < rs.rank(); ++j)
        out.images[j] = static_cast<std::int8_t>(detail::apply_signed(u_full, w.images[j]));
    return out;
}

inline GroupElement inverse(const RootSystem& rs, const GroupElement& w) {
    const std::vector<std::int16_t> w_full = full_action(rs, w);
    GroupElement out;
    for (std::size_t r = 0; r < w_full.size(); ++r) {
        const int s = w_full[r];
        const int target = std::abs(s) - 1;
        if (target < rs.rank())
            out.images[target] =
                static_cast<std::int8_t>(s > 0 ? static_cast<int>(r) + 1 : -(static_cast<int>(r) + 1));
    }
    return out;
}

/// True when w fixes the ray direction v, i.e. w lies in the symmetric-group
/// parabolic.
inline bool fixes_ray(const RootSystem& rs, const GroupElement& w) {
    const std::vector<long long> two_v_dot = detail::two_v_dot_roots(rs);
    return detail::coset_key(rs, two_v_dot, w) ==
           detail::coset_key(rs, two_v_dot, detail::identity_element(rs));
}

/// The exact orthogonal matrix of w, rows by columns: column k is w(e_k).
inline std::vector<RatVec> element_matrix(const RootSystem& rs, const GroupElement& w) {
    const int dim = rs.ambient_dim;
    std::vector<RatVec> m(dim, RatVec(dim, Rat(0)));
    for (int k = 0; k < dim; ++k) {
        RatVec col = rs.basis_off_span[k];  // w is the identity off the root span
        for (int j = 0; j < rs.rank(); ++j) {
            const Rat c = rs.basis_simple_coords[k][j];
            if (c == 0) continue;
            const int s = w.images[j];
            const RatVec& root = rs.positive_roots[std::abs(s) - 1];
            col = col + (s > 0 ? c : -c) * root;
        }
        for (int row = 0; row < dim; ++row) m[row][k] = col[row];
    }
    return m;
}

/// Apply w to a floating-point vector using the span decomposition.
inline std::vector<double> apply_element(const RootSystem& rs, const GroupElement& w,
                                         const std::vector<double>& z) {
    const std::vector<RatVec> m = element_matrix(rs, w);
    std::vector<double> out(z.size(), 0.0);
    for (std::size_t r = 0; r < z.size(); ++r)
        for (std::size_t c = 0; c < z.size(); ++c) out[r] += to_double(m[r][c]) * z[c];
    return out;
}

/// Walk the gallery cut by the ray through y: locate, for the midpoint of
/// each net interval, the unique chamber w C_e containing y - theta v, then
/// normalize so the walk starts at the identity (the start chamber always
/// differs from C_e by a parabolic element, which fixes every boundary).
/// Position j then carries Coxeter length j, and the walk visits each
/// symmetric-group coset in its minimal-length representative.
inline std::vector<GroupElement> gallery_walk(const RootSystem& rs, const Sample& y,
                                              const Enumeration& en) {
    std::vector<double> theta = detail::raw_boundaries(rs, y);
    std::sort(theta.begin(), theta.end());
    for (std::size_t i = 1; i < theta.size(); ++i)
        if (detail::boundaries_tie(theta[i - 1], theta[i]))
            throw NonGenericSample("tied boundaries at " + std::to_string(theta[i]));

    std::vector<double> midpoints;
    midpoints.push_back(theta.front() - 1.0);
    for (std::size_t i = 1; i < theta.size(); ++i)
        midpoints.push_back(0.5 * (theta[i - 1] + theta[i]));
    midpoints.push_back(theta.back() + 1.0);

    std::vector<GroupElement> walk;
    for (double t : midpoints) {
        std::vector<double> z(y.values.size());
        double scale = 1.0;
        for (std::size_t c = 0; c < z.size(); ++c) {
            z[c] = y.values[c] - t * rs.ray_direction_d[c];
            scale = std::max(scale, std::abs(z[c]));
        }
        const double eps = 1e-9 * scale;

        int found = -1;
        for (std::size_t i = 0; i < en.elements.size(); ++i) {
            const GroupElement& w = en.elements[i];
            bool inside = true;
            for (int j = 0; inside && j < rs.rank(); ++j) {
                const int s = w.images[j];
                const std::vector<double>& root = rs.positive_roots_d[std::abs(s) - 1];
                double d = 0;
                for (std::size_t c = 0; c < z.size(); ++c) d += root[c] * z[c];
                if (s < 0) d = -d;
                inside = d > eps;  // strict interior: z in w C_e iff (w a_j).z > 0 for all j
            }
            if (!inside) continue;
            if (found >= 0) throw NonGenericSample("ray midpoint lies in two chambers");
            found = static_cast<int>(i);
        }
        if (found < 0) throw NonGenericSample("ray midpoint lies on a chamber wall");
        walk.push_back(en.elements[found]);
    }

    if (!fixes_ray(rs, walk.front()))
        throw Error("internal: gallery start chamber is not a parabolic translate");
    const GroupElement align = inverse(rs, walk.front());
    const std::vector<std::int16_t> align_full = full_action(rs, align);
    for (GroupElement& w : walk) {
        GroupElement out;
        for (int j = 0; j < rs.rank(); ++j)
            out.images[j] = static_cast<std::int8_t>(detail::apply_signed(align_full, w.images[j]));
        w = out;
    }
    return walk;
}

inline std::vector<GroupElement> gallery_walk(const RootSystem& rs, const Sample& y,
                                              long long limit = default_enumeration_limit) {
    return gallery_walk(rs, y, enumerate_group(rs, limit));
}

}  // namespace coxnet
