#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxnet/errors.hpp"
#include "coxnet/group_type.hpp"
#include "coxnet/numeric.hpp"
#include "coxnet/polynomial.hpp"

namespace coxnet {

/// A concrete realization of the group's root system, together with the
/// designated symmetric-group parabolic (an A_{n-1} chain of simple roots)
/// and the ray direction v spanning the parabolic-fixed line inside the
/// span of the roots.
///
/// All coordinates are exact rationals. The positive roots are generated by
/// reflection closure from the simple roots; their order is deterministic.
struct RootSystem {
    GroupType group;
    int ambient_dim;
    std::vector<RatVec> simple_roots;
    std::vector<RatVec> positive_roots;
    std::vector<int> parabolic_nodes;   // indices into simple_roots, the A_{n-1} chain
    int outside_node;                   // the unique simple root not in the chain
    RatVec ray_direction;               // v, primitive integer form
    std::vector<std::string> warnings;

    // --- precomputed data used by the net and oracle layers ---

    /// Integer coordinates of each positive root in the simple-root basis.
    std::vector<std::vector<long long>> root_simple_coords;

    /// refl_table[i][r] = image of positive root r under the i-th simple
    /// reflection, encoded as +-(index+1).
    std::vector<std::vector<std::int16_t>> refl_table;

    /// Exact a^T v per positive root; a root is live when this is nonzero.
    std::vector<Rat> root_dot_ray;

    /// double mirrors for data-facing arithmetic
    std::vector<std::vector<double>> positive_roots_d;
    std::vector<double> ray_direction_d;

    /// Orthogonal projection onto the span of the roots (exact, and as doubles).
    std::vector<RatVec> span_projection;
    std::vector<std::vector<double>> span_projection_d;

    /// Exact decomposition data for materializing matrices: coordinates of
    /// the projection of each basis vector e_k in the simple-root basis, and
    /// the off-span remainder e_k - P e_k.
    std::vector<RatVec> basis_simple_coords;  // [ambient][rank]
    std::vector<RatVec> basis_off_span;       // [ambient][ambient]

    int rank() const { return static_cast<int>(simple_roots.size()); }

    int root_index(const RatVec& r) const {
        auto it = root_lookup_.find(r);
        return it == root_lookup_.end() ? -1 : it->second;
    }

    /// Signed index (+-(i+1)) of a vector known to be plus or minus a
    /// positive root; 0 if it is neither.
    int signed_root_index(const RatVec& r) const {
        int i = root_index(r);
        if (i >= 0) return i + 1;
        RatVec neg(r.size());
        for (std::size_t k = 0; k < r.size(); ++k) neg[k] = -r[k];
        i = root_index(neg);
        return i >= 0 ? -(i + 1) : 0;
    }

    std::map<RatVec, int> root_lookup_;
};

namespace detail {

inline RatVec unit_vector(int dim, int i) {
    RatVec e(dim, Rat(0));
    e[i] = 1;
    return e;
}

inline std::vector<RatVec> simple_roots_for(const GroupType& g) {
    const int n = g.rank();
    const int dim = g.ambient_dim();
    std::vector<RatVec> s;
    auto e = [&](int i) { return unit_vector(dim, i); };
    switch (g.family()) {
        case Family::A:
            for (int i = 0; i < n; ++i) s.push_back(e(i) - e(i + 1));
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) s.push_back(e(i) - e(i + 1));
            s.push_back(e(n - 1));
            break;
        case Family::D:
            for (int i = 0; i + 1 < n; ++i) s.push_back(e(i) - e(i + 1));
            s.push_back(e(n - 2) + e(n - 1));
            break;
        case Family::E: {
            // Bourbaki coordinates for E8; E7 and E6 take the leading
            // sub-diagrams of the same simple roots.
            RatVec a1(8, Rat(-1, 2));
            a1[0] = Rat(1, 2);
            a1[7] = Rat(1, 2);
            s.push_back(a1);
            s.push_back(e(0) + e(1));
            for (int i = 0; i + 2 < n; ++i) s.push_back(e(i + 1) - e(i));
            break;
        }
    }
    return s;
}

/// The A_{n-1} chain: everything except the last node for B/D, except the
/// final simple root for A (by symmetry either end works; we drop the last),
/// and everything except the branch node (Bourbaki node 2) for E types.
inline void parabolic_chain_for(const GroupType& g, std::vector<int>& nodes, int& outside) {
    const int n = g.rank();
    nodes.clear();
    if (g.family() == Family::E) {
        for (int i = 0; i < n; ++i)
            if (i != 1) nodes.push_back(i);
        outside = 1;
        return;
    }
    for (int i = 0; i + 1 < n; ++i) nodes.push_back(i);
    outside = n - 1;
}

inline int classical_positive_root_count(const GroupType& g) {
    const int n = g.rank();
    switch (g.family()) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    }
    return 0;
}

}  // namespace detail

/// Ray direction: the primitive vector spanning the orthogonal complement of
/// the parabolic chain inside the span of all simple roots, with the sign
/// fixed so that v has positive inner product with the simple root outside
/// the chain. For A_n this is (1,...,1,-n); for B_n and D_n it is the
/// all-ones vector.
inline RatVec parabolic_fixed_direction(const RootSystem& rs) {
    const int rank = rs.rank();
    // v = sum c_j alpha_j with <v, alpha_p> = 0 for parabolic p:
    // rows of the constraint matrix are Gram rows at the parabolic nodes.
    std::vector<RatVec> rows;
    for (int p : rs.parabolic_nodes) {
        RatVec row(rank);
        for (int j = 0; j < rank; ++j) row[j] = dot(rs.simple_roots[p], rs.simple_roots[j]);
        rows.push_back(std::move(row));
    }
    RatVec c;
    if (rows.empty()) {
        c.assign(rank, Rat(1));  // rank 1: v along the single simple root
    } else {
        c = kernel_vector(std::move(rows), rank);
    }
    RatVec v(rs.ambient_dim, Rat(0));
    for (int j = 0; j < rank; ++j) v = v + c[j] * rs.simple_roots[j];
    v = primitive_integer_scale(v);
    if (dot(v, rs.simple_roots[rs.outside_node]) < 0) v = Rat(-1) * v;
    if (dot(v, rs.simple_roots[rs.outside_node]) == 0)
        throw DegenerateParabolic("ray direction is orthogonal to the whole diagram");
    return v;
}

inline RootSystem build_root_system(const GroupType& g) {
    RootSystem rs{.group = g, .ambient_dim = g.ambient_dim()};
    rs.simple_roots = detail::simple_roots_for(g);
    detail::parabolic_chain_for(g, rs.parabolic_nodes, rs.outside_node);
    if (g.family() == Family::D && g.rank() < 4)
        rs.warnings.push_back(g.name() + " is degenerate as a D-series group (D2 is reducible, "
                              "D3 coincides with A3); formulas remain valid");

    const int rank = rs.rank();

    // Positive roots by reflection closure. Each root keeps its integer
    // coordinates in the simple basis; a reflected root is kept while those
    // coordinates stay nonnegative.
    std::vector<Rat> simple_norm2(rank);
    for (int i = 0; i < rank; ++i) simple_norm2[i] = dot(rs.simple_roots[i], rs.simple_roots[i]);

    for (int i = 0; i < rank; ++i) {
        rs.positive_roots.push_back(rs.simple_roots[i]);
        std::vector<long long> coords(rank, 0);
        coords[i] = 1;
        rs.root_simple_coords.push_back(std::move(coords));
        rs.root_lookup_[rs.simple_roots[i]] = i;
    }
    for (std::size_t head = 0; head < rs.positive_roots.size(); ++head) {
        for (int i = 0; i < rank; ++i) {
            const RatVec r = rs.positive_roots[head];
            Rat cartan = 2 * dot(rs.simple_roots[i], r) / simple_norm2[i];
            if (denominator(cartan) != 1)
                throw Error("internal: non-integral Cartan pairing");
            RatVec image = r - Rat(cartan) * rs.simple_roots[i];
            std::vector<long long> coords = rs.root_simple_coords[head];
            coords[i] -= static_cast<long long>(numerator(cartan));
            bool positive = true;
            for (long long c : coords) positive = positive && c >= 0;
            if (!positive || rs.root_lookup_.count(image)) continue;
            rs.root_lookup_[image] = static_cast<int>(rs.positive_roots.size());
            rs.positive_roots.push_back(std::move(image));
            rs.root_simple_coords.push_back(std::move(coords));
        }
    }
    const int expected = detail::classical_positive_root_count(g);
    if (static_cast<int>(rs.positive_roots.size()) != expected)
        throw Error("internal: closure produced " + std::to_string(rs.positive_roots.size()) +
                    " positive roots for " + g.name() + ", expected " + std::to_string(expected));

    // reflection tables
    rs.refl_table.assign(rank, std::vector<std::int16_t>(rs.positive_roots.size(), 0));
    for (int i = 0; i < rank; ++i) {
        for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
            Rat cartan = 2 * dot(rs.simple_roots[i], rs.positive_roots[r]) / simple_norm2[i];
            RatVec image = rs.positive_roots[r] - Rat(cartan) * rs.simple_roots[i];
            int signed_idx = rs.signed_root_index(image);
            if (signed_idx == 0) throw Error("internal: reflection left the root system");
            rs.refl_table[i][r] = static_cast<std::int16_t>(signed_idx);
        }
    }

    rs.ray_direction = parabolic_fixed_direction(rs);

    rs.root_dot_ray.resize(rs.positive_roots.size());
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r)
        rs.root_dot_ray[r] = dot(rs.positive_roots[r], rs.ray_direction);

    // double mirrors
    auto to_dvec = [](const RatVec& v) {
        std::vector<double> d(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) d[i] = to_double(v[i]);
        return d;
    };
    for (const RatVec& r : rs.positive_roots) rs.positive_roots_d.push_back(to_dvec(r));
    rs.ray_direction_d = to_dvec(rs.ray_direction);

    // span projection P = S (S^T S)^{-1} S^T, exact
    const int dim = rs.ambient_dim;
    std::vector<RatVec> gram(rank, RatVec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) gram[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
    rs.basis_simple_coords.resize(dim);
    rs.basis_off_span.resize(dim);
    rs.span_projection.assign(dim, RatVec(dim, Rat(0)));
    for (int k = 0; k < dim; ++k) {
        RatVec rhs(rank);
        for (int i = 0; i < rank; ++i) rhs[i] = rs.simple_roots[i][k];
        RatVec c = solve_linear(gram, rhs);
        rs.basis_simple_coords[k] = c;
        RatVec proj(dim, Rat(0));
        for (int j = 0; j < rank; ++j) proj = proj + c[j] * rs.simple_roots[j];
        for (int row = 0; row < dim; ++row) rs.span_projection[row][k] = proj[row];
        rs.basis_off_span[k] = detail::unit_vector(dim, k) - proj;
    }
    for (int row = 0; row < dim; ++row)
        rs.span_projection_d.push_back(to_dvec(rs.span_projection[row]));

    return rs;
}

/// Positive roots not orthogonal to the ray direction. Each live root
/// contributes one net boundary; their number equals the degree of the net
/// generating function.
struct LiveRoots {
    std::vector<int> root_indices;
    int boundary_count;
};

inline LiveRoots live_roots(const RootSystem& rs) {
    LiveRoots lr;
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r)
        if (rs.root_dot_ray[r] != 0) lr.root_indices.push_back(static_cast<int>(r));
    lr.boundary_count = static_cast<int>(lr.root_indices.size());
    return lr;
}

}  // namespace coxnet
