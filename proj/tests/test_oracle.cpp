#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "coxnet/oracle.hpp"

using namespace coxnet;

TEST_CASE("group enumeration") {
    CHECK(enumerate_elements(build_root_system(GroupType::b(2))).size() == 8);
    CHECK(enumerate_elements(build_root_system(GroupType::a(3))).size() == 24);
    CHECK(enumerate_elements(build_root_system(GroupType::d(4))).size() == 192);

    SECTION("E6 closes at 51840") {
        CHECK(enumerate_elements(build_root_system(GroupType::e(6))).size() == 51840);
    }

    SECTION("enumeration limit") {
        const RootSystem e8 = build_root_system(GroupType::e(8));
        CHECK_THROWS_MATCHES(enumerate_elements(e8), GroupTooLarge,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("696729600")));
        CHECK_THROWS_AS(enumerate_elements(build_root_system(GroupType::b(3)), 10),
                        GroupTooLarge);
    }

    SECTION("elements act orthogonally and are involutive under inverse") {
        for (const GroupType& g : {GroupType::b(3), GroupType::a(3), GroupType::d(4)}) {
            const RootSystem rs = build_root_system(g);
            const Enumeration en = enumerate_group(rs);
            std::mt19937_64 rng(11);
            std::uniform_int_distribution<std::size_t> pick(0, en.elements.size() - 1);
            for (int rep = 0; rep < 8; ++rep) {
                const GroupElement w = en.elements[pick(rng)];
                const auto m = element_matrix(rs, w);
                // M^T M = I, exactly
                for (int i = 0; i < rs.ambient_dim; ++i)
                    for (int j = 0; j < rs.ambient_dim; ++j) {
                        Rat s = 0;
                        for (int k = 0; k < rs.ambient_dim; ++k) s += m[k][i] * m[k][j];
                        CHECK(s == (i == j ? 1 : 0));
                    }
                CHECK(compose(rs, w, inverse(rs, w)) == detail::identity_element(rs));
            }
        }
    }
}

TEST_CASE("length histogram matches the Poincare polynomial") {
    CHECK(length_histogram(GroupType::b(2)).counts == std::vector<long long>{1, 2, 2, 2, 1});
    CHECK(length_histogram(GroupType::a(2)).counts == std::vector<long long>{1, 2, 2, 1});
    CHECK(length_histogram(GroupType::a(1)).counts == std::vector<long long>{1, 1});

    for (const GroupType& g : {GroupType::a(4), GroupType::b(3), GroupType::b(4),
                               GroupType::d(4), GroupType::d(5)})
        CHECK(to_polynomial(length_histogram(g)) == poincare_polynomial(g));
}

TEST_CASE("coset minimal length histogram matches the net generating function") {
    CHECK(coset_min_length_histogram(GroupType::b(3)).counts ==
          std::vector<long long>{1, 1, 1, 2, 1, 1, 1});
    CHECK(coset_min_length_histogram(GroupType::a(3)).counts ==
          std::vector<long long>{1, 1, 1, 1});
    CHECK(coset_min_length_histogram(GroupType::d(4)).counts ==
          std::vector<long long>{1, 1, 1, 2, 1, 1, 1});

    for (const GroupType& g : {GroupType::a(4), GroupType::b(4), GroupType::d(5),
                               GroupType::b(1), GroupType::d(2), GroupType::d(3)})
        CHECK(to_polynomial(coset_min_length_histogram(g)) == net_generating_function(g));

    SECTION("ray-invariant cosets coincide with explicit parabolic-membership cosets") {
        for (const GroupType& g : {GroupType::b(3), GroupType::a(3), GroupType::d(3)}) {
            const RootSystem rs = build_root_system(g);
            const Enumeration en = enumerate_group(rs);
            const auto two_v_dot = detail::two_v_dot_roots(rs);
            for (const GroupElement& u : en.elements)
                for (const GroupElement& w : en.elements) {
                    const bool same_key = detail::coset_key(rs, two_v_dot, u) ==
                                          detail::coset_key(rs, two_v_dot, w);
                    const bool same_coset = fixes_ray(rs, compose(rs, u, inverse(rs, w)));
                    CHECK(same_key == same_coset);
                }
        }
    }
}

TEST_CASE("sign vector histograms") {
    CHECK(sign_vector_histogram_B(2).counts == std::vector<long long>{1, 1, 1, 1});
    CHECK(sign_vector_histogram_B(3).counts == std::vector<long long>{1, 1, 1, 2, 1, 1, 1});
    CHECK(sign_vector_histogram_B(4).counts ==
          std::vector<long long>{1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1});
    CHECK(sign_vector_histogram_D(2).counts == std::vector<long long>{1, 1});
    CHECK(sign_vector_histogram_D(4).counts == std::vector<long long>{1, 1, 1, 2, 1, 1, 1});

    SECTION("histograms equal the generating function products") {
        for (int n = 1; n <= 12; ++n)
            CHECK(to_polynomial(sign_vector_histogram_B(n)) ==
                  net_generating_function(GroupType::b(n)));
        for (int n = 2; n <= 12; ++n)
            CHECK(to_polynomial(sign_vector_histogram_D(n)) ==
                  net_generating_function(GroupType::d(n)));
    }

    SECTION("enumeration agrees with the convolution route") {
        Polynomial prod = Polynomial::one();
        for (int i = 1; i <= 5; ++i) prod = prod * Polynomial::one_plus_power(i);
        CHECK(to_polynomial(sign_vector_histogram_D(6)) == prod);
        // above the enumeration cutoff the convolution branch is used
        CHECK(to_polynomial(sign_vector_histogram_B(25)) ==
              net_generating_function(GroupType::b(25)));
    }
}

TEST_CASE("gallery walks") {
    SECTION("B2 lengths run 0,1,2,3") {
        const RootSystem rs = build_root_system(GroupType::b(2));
        const Enumeration en = enumerate_group(rs);
        const auto walk = gallery_walk(rs, Sample{{1, 3}});
        REQUIRE(walk.size() == 4);
        CHECK(walk.front() == detail::identity_element(rs));
        for (std::size_t j = 0; j < walk.size(); ++j)
            CHECK(en.lengths[static_cast<std::size_t>(en.index.at(walk[j]))] ==
                  static_cast<int>(j));
    }

    SECTION("positions carry their length and are the unique coset minima") {
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> u(-4.0, 4.0);
        for (const GroupType& g : {GroupType::b(2), GroupType::b(3), GroupType::b(4),
                                   GroupType::d(4), GroupType::a(2), GroupType::a(3)}) {
            const RootSystem rs = build_root_system(g);
            const Enumeration en = enumerate_group(rs);
            const auto two_v_dot = detail::two_v_dot_roots(rs);

            // coset -> minimal length, from the full partition
            std::map<std::array<std::int8_t, 16>, int> coset_min;
            for (std::size_t i = 0; i < en.elements.size(); ++i) {
                const auto key = detail::coset_key(rs, two_v_dot, en.elements[i]).images;
                auto [it, fresh] = coset_min.emplace(key, en.lengths[i]);
                if (!fresh) it->second = std::min(it->second, en.lengths[i]);
            }

            for (int rep = 0; rep < 3; ++rep) {
                Sample y;
                y.values.resize(static_cast<std::size_t>(rs.ambient_dim));
                for (double& x : y.values) x = u(rng);
                if (g.family() == Family::A) {
                    double mean = 0;
                    for (double x : y.values) mean += x;
                    mean /= static_cast<double>(y.values.size());
                    for (double& x : y.values) x -= mean;
                }
                const auto walk = gallery_walk(rs, y);
                REQUIRE(static_cast<int>(walk.size()) ==
                        net_generating_function(g).degree() + 1);
                std::set<std::array<std::int8_t, 16>> seen;
                for (std::size_t j = 0; j < walk.size(); ++j) {
                    const int len = en.lengths[static_cast<std::size_t>(en.index.at(walk[j]))];
                    CHECK(len == static_cast<int>(j));
                    const auto key = detail::coset_key(rs, two_v_dot, walk[j]).images;
                    CHECK(coset_min.at(key) == len);
                    CHECK(seen.insert(key).second);  // distinct cosets along the walk
                }
            }
        }
    }

    SECTION("tied samples are rejected") {
        const RootSystem rs = build_root_system(GroupType::b(2));
        CHECK_THROWS_AS(gallery_walk(rs, Sample{{1, 1}}), NonGenericSample);
    }

    SECTION("last element has the length of the generating function degree") {
        const RootSystem rs = build_root_system(GroupType::d(4));
        const Enumeration en = enumerate_group(rs);
        const auto walk = gallery_walk(rs, Sample{{0.3, 1.9, -2.2, 4.1}});
        CHECK(en.lengths[static_cast<std::size_t>(en.index.at(walk.back()))] ==
              net_generating_function(GroupType::d(4)).degree());
    }
}
