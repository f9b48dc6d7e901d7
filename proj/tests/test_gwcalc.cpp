#include "ruledgw/gwcalc.hpp"

#include "ruledgw/errors.hpp"

#include <doctest.h>

#include <random>

using exactalg::Rational;
using namespace gwcalc;

TEST_CASE("setup validation") {
    CHECK_THROWS_AS(GWSetup(-1, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(GWSetup(0, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(GWSetup(0, 1, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(GWSetup(0, 1, 0, -1), std::invalid_argument);
}

TEST_CASE("index formula instances") {
    CHECK(index(GWSetup(1, 1, 2, 0)) == 0);
    CHECK(index(GWSetup(0, 1, 1, 0)) == 0);
    CHECK(index(GWSetup(0, 1, 2, 0)) == 2);
    CHECK(index(GWSetup(2, 3, 1, 0)) == -12);
    CHECK(index(GWSetup(0, 1, 1, 2)) == 4);  // marked points enter with weight 2
}

TEST_CASE("the admissible level and the obstruction rank coincide") {
    CHECK(admissible_p(1, 1) == 2);
    CHECK(admissible_p(0, 2) == 3);
    CHECK(admissible_p(3, 1) == 4);
    CHECK(obstruction_rank(1, 1) == 2);
    CHECK(obstruction_rank(0, 2) == 3);
    CHECK(obstruction_rank(2, 1) == 3);
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= 5; ++k)
            CHECK(obstruction_rank(g, k) == admissible_p(g, k));
}

TEST_CASE("index vanishes exactly at the admissible level") {
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= 5; ++k)
            for (int p = 0; p <= 20; ++p) {
                int idx = index(GWSetup(g, k, p, 0));
                if (p == admissible_p(g, k))
                    CHECK(idx == 0);
                else
                    CHECK(idx != 0);
            }
}

TEST_CASE("index is always even") {
    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= 5; ++k)
            for (int p = 0; p <= 12; ++p)
                for (int m = 0; m <= 3; ++m)
                    CHECK(index(GWSetup(g, k, p, m)) % 2 == 0);
}

TEST_CASE("the equivariant count is a single unit term") {
    EquivariantInvariant inv = egw_ruled(0, 1);
    REQUIRE(inv.coefficients.size() == 1);
    CHECK(inv.coefficients.begin()->first == 1);
    CHECK(inv.coefficients.begin()->second.abs() == Rational(1));
    CHECK_FALSE(inv.sign_determined);

    CHECK(egw_ruled(1, 1).coefficients.begin()->first == 2);
    CHECK(egw_ruled(2, 3).coefficients.begin()->first == 7);

    for (int g = 0; g <= 4; ++g)
        for (int k = 1; k <= 5; ++k) {
            EquivariantInvariant e = egw_ruled(g, k);
            REQUIRE(e.coefficients.size() == 1);
            auto [exp, c] = *e.coefficients.begin();
            CHECK(exp == 2 * k + g - 1);
            CHECK(c.abs() == Rational(1));
            CHECK(c.sign() == (exp % 2 == 0 ? 1 : -1));  // (-1)^p convention
        }
}

TEST_CASE("series assembly") {
    CHECK(to_string(egw_series({{2, PGWValue{Rational(1)}}})) == "u^2");
    CHECK(to_string(egw_series({})) == "0");
    CHECK(to_string(egw_series({{1, PGWValue{Rational(1)}}, {3, PGWValue{Rational(-2)}}})) ==
          "u - 2*u^3");
    CHECK(to_string(egw_series({{0, PGWValue{Rational(1, 2)}}})) == "1/2");
    // zero levels are dropped
    CHECK(egw_series({{4, PGWValue{Rational(0)}}}).is_zero());
    CHECK_THROWS_AS(egw_series({{-1, PGWValue{Rational(1)}}}), std::invalid_argument);
}

TEST_CASE("connected sums add and coverings scale") {
    CHECK(pgw_sum(PGWValue{Rational(1)}, PGWValue{Rational(0)}) == PGWValue{Rational(1)});
    CHECK(pgw_sum(PGWValue{Rational(0)}, PGWValue{Rational(0)}) == PGWValue{Rational(0)});
    CHECK(pgw_sum(PGWValue{Rational(2)}, PGWValue{Rational(-2)}) == PGWValue{Rational(0)});
    CHECK(pgw_cover(PGWValue{Rational(1)}, 3) == PGWValue{Rational(3)});
    CHECK(pgw_cover(PGWValue{Rational(0)}, 5) == PGWValue{Rational(0)});
    CHECK(pgw_cover(PGWValue{Rational(-1)}, 2) == PGWValue{Rational(-2)});
    CHECK_THROWS_AS(pgw_cover(PGWValue{Rational(1)}, 0), std::invalid_argument);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9), n(1, 9);
    for (int t = 0; t < 150; ++t) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK(pgw_sum(PGWValue{a}, PGWValue{b}).value == a + b);
        int cover = n(rng);
        PGWValue covered = pgw_cover(PGWValue{a}, cover);
        CHECK(covered.value == Rational(cover) * a);
        if (!a.is_zero())
            CHECK_FALSE(covered.value.is_zero());
    }
}

TEST_CASE("internal rank consistency is enforced") {
    // admissible_p and obstruction_rank agree for all valid inputs, so
    // egw_ruled must construct cleanly everywhere in range
    for (int g = 0; g <= 6; ++g)
        for (int k = 1; k <= 6; ++k)
            CHECK_NOTHROW(egw_ruled(g, k));
    CHECK_THROWS_AS(egw_ruled(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(egw_ruled(0, 0), std::invalid_argument);
}
