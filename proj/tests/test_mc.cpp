#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>

#include "coxnet/mc.hpp"
#include "coxnet/nongroup.hpp"
#include "coxnet/polynomial.hpp"

using namespace coxnet;

namespace {

void check_within_se(const std::vector<long long>& counts, const std::vector<Rat>& expected,
                     long long trials, double se_multiple) {
    REQUIRE(counts.size() == expected.size());
    long long total = 0;
    for (long long c : counts) total += c;
    CHECK(total == trials);
    for (std::size_t j = 0; j < counts.size(); ++j) {
        const double p = to_double(expected[j]);
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
        const double phat = static_cast<double>(counts[j]) / static_cast<double>(trials);
        INFO("cell " << j << ": phat=" << phat << " p=" << p);
        CHECK(std::abs(phat - p) <= se_multiple * se);
    }
}

std::vector<Rat> gf_probs(const Polynomial& gf) {
    std::vector<Rat> p;
    for (const Int& c : gf.coeffs()) p.emplace_back(c, gf.sum_of_coefficients());
    return p;
}

}  // namespace

TEST_CASE("monte carlo coverage") {
    SECTION("same seed reproduces the histogram exactly") {
        const RootSystem rs = build_root_system(GroupType::b(3));
        CHECK(monte_carlo_coverage(rs, 20000, 42, 0.5) ==
              monte_carlo_coverage(rs, 20000, 42, 0.5));
        CHECK(monte_carlo_coverage(rs, 20000, 42, 0.5) !=
              monte_carlo_coverage(rs, 20000, 43, 0.5));
    }

    SECTION("worker count does not change the result") {
        const RootSystem rs = build_root_system(GroupType::b(3));
        setenv("COXNET_THREADS", "1", 1);
        const auto one = monte_carlo_coverage(rs, 150000, 7, 0.0);
        setenv("COXNET_THREADS", "3", 1);
        const auto three = monte_carlo_coverage(rs, 150000, 7, 0.0);
        unsetenv("COXNET_THREADS");
        CHECK(one == three);
    }

    SECTION("B3 empirical coverage matches 1,1,1,2,1,1,1 over 8") {
        const auto counts = monte_carlo_coverage(GroupType::b(3), 200000, 2024, 1.25);
        check_within_se(counts, gf_probs(net_generating_function(GroupType::b(3))), 200000, 5.0);
    }

    SECTION("A2 empirical coverage is uniform over thirds") {
        const auto counts = monte_carlo_coverage(GroupType::a(2), 120000, 5, -0.75);
        check_within_se(counts, gf_probs(net_generating_function(GroupType::a(2))), 120000, 5.0);
    }

    SECTION("trial count must be positive") {
        CHECK_THROWS_AS(monte_carlo_coverage(GroupType::b(2), 0, 1, 0.0), Error);
    }
}

TEST_CASE("subsample-mean monte carlo") {
    SECTION("n=3 covers each of the eight intervals equally") {
        const auto counts = hartigan_mc(3, 100000, 11);
        check_within_se(counts, std::vector<Rat>(8, Rat(1, 8)), 100000, 5.0);
    }

    SECTION("n=1 sign symmetry") {
        const auto counts = hartigan_mc(1, 50000, 3);
        check_within_se(counts, std::vector<Rat>(2, Rat(1, 2)), 50000, 5.0);
    }

    SECTION("fixed seed reproducibility") {
        CHECK(hartigan_mc(4, 30000, 9) == hartigan_mc(4, 30000, 9));
    }

    CHECK_THROWS_AS(hartigan_mc(13, 10, 1), Error);
}

TEST_CASE("congruent-cone monte carlo") {
    const auto counts = nongroup_mc(3, 100000, 17, 0.4);
    check_within_se(counts, gf_probs(nongroup_gf(3)), 100000, 5.0);
}
