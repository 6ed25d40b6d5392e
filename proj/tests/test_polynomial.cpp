#include <catch2/catch_amalgamated.hpp>

#include "coxnet/polynomial.hpp"

using namespace coxnet;

TEST_CASE("polynomial multiplication") {
    const Polynomial a{1, 1};        // 1+q
    const Polynomial b{1, 0, 1};     // 1+q^2
    const Polynomial c{1, 0, 0, 1};  // 1+q^3

    CHECK(a * b == Polynomial{1, 1, 1, 1});
    CHECK(a * Polynomial::one() == a);
    CHECK(a * b * c == Polynomial{1, 1, 1, 2, 1, 1, 1});

    SECTION("degrees add for nonzero factors") {
        CHECK((a * c).degree() == 4);
        CHECK((a * Polynomial::zero()).is_zero());
    }
}

TEST_CASE("exact division") {
    CHECK(divide_exact(Polynomial::one_minus_power(4), Polynomial::one_minus_power(1)) ==
          Polynomial{1, 1, 1, 1});

    // (1-q^2)(1-q^4) / ((1-q)(1-q^2)) worked out by long division
    const Polynomial num = Polynomial::one_minus_power(2) * Polynomial::one_minus_power(4);
    const Polynomial den = Polynomial::one_minus_power(1) * Polynomial::one_minus_power(2);
    CHECK(divide_exact(num, den) == Polynomial{1, 1, 1, 1});

    CHECK_THROWS_AS(divide_exact(Polynomial{1, 0, 1}, Polynomial{1, 1}), NonExactDivision);
    CHECK_THROWS_AS(divide_exact(Polynomial::one(), Polynomial::zero()), NonExactDivision);

    SECTION("random product round-trips") {
        for (int d1 = 1; d1 <= 6; ++d1)
            for (int d2 = 1; d2 <= 6; ++d2) {
                const Polynomial p = Polynomial::q_integer(d1) * Polynomial::one_plus_power(d2);
                const Polynomial q = Polynomial::q_integer(d2 + 1);
                CHECK(divide_exact(p * q, q) == p);
            }
    }
}

TEST_CASE("basic invariant degrees") {
    CHECK(degrees(GroupType::b(4)).degrees == std::vector<int>{2, 4, 6, 8});
    CHECK(degrees(GroupType::e(8)).degrees == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK(degrees(GroupType::a(3)).degrees == std::vector<int>{2, 3, 4});
    CHECK(degrees(GroupType::e(6)).degrees == std::vector<int>{2, 5, 6, 8, 9, 12});
    CHECK(degrees(GroupType::e(7)).degrees == std::vector<int>{2, 6, 8, 10, 12, 14, 18});
    CHECK(degrees(GroupType::d(4)).degrees == std::vector<int>{2, 4, 4, 6});

    SECTION("degree list length equals rank, smallest degree is 2") {
        for (const GroupType& g : {GroupType::a(5), GroupType::b(3), GroupType::d(5),
                                   GroupType::e(7)}) {
            const auto d = degrees(g).degrees;
            CHECK(static_cast<int>(d.size()) == g.rank());
            CHECK(d.front() == 2);
            CHECK(std::is_sorted(d.begin(), d.end()));
        }
    }

    SECTION("unsupported families") {
        CHECK_THROWS_AS(GroupType::parse("F4"), UnsupportedGroup);
        CHECK_THROWS_AS(GroupType::parse("G2"), UnsupportedGroup);
        CHECK_THROWS_AS(GroupType::parse("H3"), UnsupportedGroup);
        CHECK_THROWS_AS(GroupType::parse("I2"), UnsupportedGroup);
        CHECK_THROWS_AS(GroupType::parse("E9"), UnsupportedGroup);
        CHECK_THROWS_AS(GroupType::parse("D1"), UnsupportedGroup);
        CHECK(GroupType::parse("b12") == GroupType::b(12));
    }
}

TEST_CASE("poincare polynomial") {
    CHECK(poincare_polynomial(GroupType::b(2)) == Polynomial{1, 2, 2, 2, 1});
    CHECK(poincare_polynomial(GroupType::a(1)) == Polynomial{1, 1});
    CHECK(poincare_polynomial(GroupType::b(3)).sum_of_coefficients() == 48);

    SECTION("coefficient sum is the group order") {
        for (const GroupType& g : {GroupType::a(4), GroupType::b(4), GroupType::d(4),
                                   GroupType::e(6), GroupType::e(7), GroupType::e(8)})
            CHECK(poincare_polynomial(g).sum_of_coefficients() == g.order());
    }
}

TEST_CASE("net generating function") {
    CHECK(net_generating_function(GroupType::b(3)) == Polynomial{1, 1, 1, 2, 1, 1, 1});
    CHECK(net_generating_function(GroupType::b(4)) ==
          Polynomial{1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1});
    CHECK(net_generating_function(GroupType::d(4)) == Polynomial{1, 1, 1, 2, 1, 1, 1});

    SECTION("A_n gives the uniform distribution") {
        for (int n = 1; n <= 7; ++n)
            CHECK(net_generating_function(GroupType::a(n)) ==
                  Polynomial(std::vector<Int>(static_cast<std::size_t>(n) + 1, Int(1))));
    }

    SECTION("B_n and D_n product identities") {
        for (int n = 1; n <= 9; ++n) {
            Polynomial prod = Polynomial::one();
            for (int i = 1; i <= n; ++i) prod = prod * Polynomial::one_plus_power(i);
            CHECK(net_generating_function(GroupType::b(n)) == prod);
        }
        for (int n = 2; n <= 9; ++n) {
            Polynomial prod = Polynomial::one();
            for (int j = 1; j < n; ++j) prod = prod * Polynomial::one_plus_power(j);
            CHECK(net_generating_function(GroupType::d(n)) == prod);
        }
    }

    SECTION("palindromic coefficients") {
        for (const GroupType& g : {GroupType::a(6), GroupType::b(5), GroupType::d(6),
                                   GroupType::e(6), GroupType::e(7), GroupType::e(8)})
            CHECK(net_generating_function(g).is_palindromic());
    }

    SECTION("value at q=1 is the symmetric group index") {
        CHECK(net_generating_function(GroupType::b(6)).sum_of_coefficients() == 64);
        CHECK(net_generating_function(GroupType::d(6)).sum_of_coefficients() == 32);
        CHECK(net_generating_function(GroupType::e(6)).sum_of_coefficients() == 72);
        CHECK(net_generating_function(GroupType::e(7)).sum_of_coefficients() == 576);
        CHECK(net_generating_function(GroupType::e(8)).sum_of_coefficients() == 17280);
    }

    SECTION("quotient consistency with the symmetric group factor") {
        for (int n = 2; n <= 6; ++n) {
            const Polynomial lhs = poincare_polynomial(GroupType::b(n));
            const Polynomial rhs = net_generating_function(GroupType::b(n)) *
                                   poincare_polynomial(GroupType::a(n - 1));
            CHECK(lhs == rhs);
        }
    }
}
