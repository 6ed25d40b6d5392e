#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "coxnet/polynomial.hpp"
#include "coxnet/root_system.hpp"

using namespace coxnet;

namespace {

RatVec rv(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("positive root closure") {
    const RootSystem b2 = build_root_system(GroupType::b(2));
    std::set<RatVec> roots(b2.positive_roots.begin(), b2.positive_roots.end());
    CHECK(roots == std::set<RatVec>{rv({1, -1}), rv({0, 1}), rv({1, 0}), rv({1, 1})});

    CHECK(build_root_system(GroupType::a(2)).positive_roots.size() == 3);
    CHECK(build_root_system(GroupType::b(3)).positive_roots.size() == 9);
    CHECK(build_root_system(GroupType::d(4)).positive_roots.size() == 12);
    CHECK(build_root_system(GroupType::e(6)).positive_roots.size() == 36);
    CHECK(build_root_system(GroupType::e(7)).positive_roots.size() == 63);
    CHECK(build_root_system(GroupType::e(8)).positive_roots.size() == 120);

    SECTION("every positive root is a nonnegative integer combination of simple roots") {
        const RootSystem rs = build_root_system(GroupType::e(6));
        for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
            RatVec rebuilt(rs.ambient_dim, Rat(0));
            for (int j = 0; j < rs.rank(); ++j) {
                CHECK(rs.root_simple_coords[r][j] >= 0);
                rebuilt = rebuilt + Rat(rs.root_simple_coords[r][j]) * rs.simple_roots[j];
            }
            CHECK(rebuilt == rs.positive_roots[r]);
        }
    }

    SECTION("reflection closure: s_a(b) is plus or minus a root, for all roots a") {
        for (const GroupType& g : {GroupType::b(3), GroupType::a(3), GroupType::d(4),
                                   GroupType::e(6)}) {
            const RootSystem rs = build_root_system(g);
            for (const RatVec& a : rs.positive_roots) {
                const Rat norm2 = dot(a, a);
                for (const RatVec& b : rs.positive_roots) {
                    const RatVec image = b - Rat(2 * dot(a, b) / norm2) * a;
                    CHECK(rs.signed_root_index(image) != 0);
                }
            }
        }
    }
}

TEST_CASE("ray directions") {
    CHECK(build_root_system(GroupType::b(3)).ray_direction == rv({1, 1, 1}));
    CHECK(build_root_system(GroupType::b(1)).ray_direction == rv({1}));
    CHECK(build_root_system(GroupType::d(4)).ray_direction == rv({1, 1, 1, 1}));
    CHECK(build_root_system(GroupType::a(2)).ray_direction == rv({1, 1, -2}));
    CHECK(build_root_system(GroupType::a(5)).ray_direction == rv({1, 1, 1, 1, 1, -5}));
    CHECK(build_root_system(GroupType::e(8)).ray_direction == rv({1, 1, 1, 1, 1, 1, 1, 5}));
    CHECK(build_root_system(GroupType::e(7)).ray_direction == rv({1, 1, 1, 1, 1, 1, -2, 2}));
    CHECK(build_root_system(GroupType::e(6)).ray_direction == rv({1, 1, 1, 1, 1, -1, -1, 1}));

    SECTION("v is orthogonal to the chain and meets the outside root positively") {
        for (const GroupType& g : {GroupType::a(4), GroupType::b(5), GroupType::d(5),
                                   GroupType::e(6), GroupType::e(7), GroupType::e(8)}) {
            const RootSystem rs = build_root_system(g);
            for (int p : rs.parabolic_nodes)
                CHECK(dot(rs.ray_direction, rs.simple_roots[p]) == 0);
            CHECK(dot(rs.ray_direction, rs.simple_roots[rs.outside_node]) > 0);
        }
    }
}

TEST_CASE("live roots") {
    SECTION("B3: singletons and pairwise-mean roots") {
        const RootSystem rs = build_root_system(GroupType::b(3));
        const LiveRoots lr = live_roots(rs);
        std::set<RatVec> live;
        for (int r : lr.root_indices) live.insert(rs.positive_roots[r]);
        CHECK(live == std::set<RatVec>{rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}),
                                       rv({1, 1, 0}), rv({1, 0, 1}), rv({0, 1, 1})});
    }

    SECTION("D4: exactly the pair-sum roots") {
        const RootSystem rs = build_root_system(GroupType::d(4));
        const LiveRoots lr = live_roots(rs);
        CHECK(lr.boundary_count == 6);
        for (int r : lr.root_indices) {
            Rat sum = 0;
            for (const Rat& c : rs.positive_roots[r]) sum += c;
            CHECK(sum == 2);  // e_i + e_j
        }
    }

    SECTION("boundary count equals the generating function degree") {
        for (const GroupType& g : {GroupType::a(1), GroupType::a(4), GroupType::b(1),
                                   GroupType::b(4), GroupType::d(2), GroupType::d(3),
                                   GroupType::d(5), GroupType::e(6), GroupType::e(7),
                                   GroupType::e(8)}) {
            const RootSystem rs = build_root_system(g);
            CHECK(live_roots(rs).boundary_count == net_generating_function(g).degree());
        }
        CHECK(live_roots(build_root_system(GroupType::e(6))).boundary_count == 21);
        CHECK(live_roots(build_root_system(GroupType::e(7))).boundary_count == 42);
        CHECK(live_roots(build_root_system(GroupType::e(8))).boundary_count == 92);
    }

    SECTION("roots orthogonal to v are exactly the symmetric-group subsystem") {
        for (const GroupType& g : {GroupType::a(4), GroupType::b(4), GroupType::d(4),
                                   GroupType::e(6), GroupType::e(7), GroupType::e(8)}) {
            const RootSystem rs = build_root_system(g);
            const int n = g.rank();
            const int dead = static_cast<int>(rs.positive_roots.size()) -
                             live_roots(rs).boundary_count;
            CHECK(dead == n * (n - 1) / 2);
        }
    }
}

TEST_CASE("degenerate D ranks carry a warning") {
    CHECK_FALSE(build_root_system(GroupType::d(2)).warnings.empty());
    CHECK_FALSE(build_root_system(GroupType::d(3)).warnings.empty());
    CHECK(build_root_system(GroupType::d(4)).warnings.empty());
}
