#include "yzq/eisenstein.hpp"

#include "yzq/divisor_sums.hpp"
#include "yzq/errors.hpp"

#include "../support/random_series.hpp"

#include <doctest.h>

using yzq::DivisorSumTable;
using yzq::eisenstein_g2;
using yzq::eisenstein_g4;
using yzq::fit_weight4_level2;
using yzq::g2_even_odd;
using yzq::g2_level2_square;
using yzq::PowerSeries;
using yzq::quasimodular_combination;
using yzq::quasimodular_relation_check;
using yzq::Rational;
using yzq::weight4_level2_e_series;

TEST_CASE("G2 expansion") {
    const PowerSeries g2 = eisenstein_g2(8);
    CHECK(g2[0] == Rational(-1, 24));
    CHECK(g2[1] == Rational(1));
    CHECK(g2[4] == Rational(7)); // 1 + 2 + 4
    const DivisorSumTable table(8);
    for (int d = 1; d <= 8; ++d) CHECK(g2[d] == Rational(table.sigma(d)));
}

TEST_CASE("even/odd parts of G2") {
    const auto [ge, go] = g2_even_odd(8);
    CHECK(ge + go == eisenstein_g2(8));
    CHECK(ge[0] == Rational(-1, 24));
    CHECK(ge[1] == Rational(0));
    CHECK(go[1] == Rational(1));
    CHECK(go[3] == Rational(4));
    REQUIRE(go.valuation().has_value());
    CHECK(*go.valuation() == 1);
}

TEST_CASE("G4 expansion") {
    const PowerSeries g4 = eisenstein_g4(4);
    CHECK(g4[0] == Rational(1, 24));
    CHECK(g4[1] == Rational(10));
    CHECK(g4[2] == Rational(90)); // 10 * sigma3(2) = 10 * 9
}

TEST_CASE("level-2 square generator") {
    const PowerSeries g2_4 = g2_level2_square(16);
    CHECK(g2_4[0] == Rational(1, 576));
    CHECK(g2_4[1] == Rational(1, 12));
    CHECK(g2_4[2] == Rational(13, 12)); // 26/24

    // Independent recomputation: h[k] = sigma(k) - 2*sigma(k/2) (h[0] = 1/24),
    // squared by a plain double loop.
    const DivisorSumTable table(16);
    std::vector<Rational> h(17);
    h[0] = Rational(1, 24); // -1/24 - 2*(-1/24)
    for (int k = 1; k <= 16; ++k) {
        Rational value(table.sigma(k));
        if (k % 2 == 0) value -= Rational(2) * Rational(table.sigma(k / 2));
        h[static_cast<std::size_t>(k)] = value;
    }
    for (int k = 0; k <= 16; ++k) {
        Rational oracle;
        for (int i = 0; i <= k; ++i)
            oracle += h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(k - i)];
        CHECK(g2_4[k] == oracle);
    }
}

TEST_CASE("quasi-modular relation vanishes at every order tried") {
    for (int order : {2, 8, 32, 64}) {
        const auto report = quasimodular_relation_check(order);
        CHECK(report.passed);
        CHECK(report.order_checked == order);
        CHECK(!report.first_failure_degree.has_value());
    }
    CHECK_THROWS_AS(quasimodular_relation_check(1), std::invalid_argument);
}

TEST_CASE("constant term of the relation cancels exactly") {
    // 32*(1/576) - 40*(1/576) + 8*(1/576) = 0 with G2[0] = -1/24
    const Rational g0 = Rational(-1, 24);
    CHECK(Rational(-32) * g0 * g0 + Rational(40) * g0 * g0 - Rational(8) * g0 * g0 ==
          Rational(0));
    CHECK(quasimodular_combination(8)[0] == Rational(0));
}

TEST_CASE("dropping the cross term breaks the relation at degree 0") {
    const int order = 8;
    const PowerSeries g2 = eisenstein_g2(order);
    const PowerSeries g2_t2 = g2.compose_power(2);
    const PowerSeries damaged = Rational(2) * g2_t2.theta() - Rational(32) * (g2_t2 * g2_t2) -
                                Rational(8) * (g2 * g2) + g2.theta();
    const auto report = yzq::IdentityReport::from_residual("damaged-relation", damaged);
    CHECK(!report.passed);
    REQUIRE(report.first_failure_degree.has_value());
    CHECK(*report.first_failure_degree == 0);
    CHECK(damaged[0] == Rational(-40, 576)); // the missing 40*G2(t)G2(t^2) term
}

TEST_CASE("weight-4 level-2 basis fit") {
    SUBCASE("basis elements") {
        const auto fit = fit_weight4_level2(eisenstein_g4(32));
        CHECK(fit.a == Rational(1));
        CHECK(fit.b == Rational(0));
        CHECK(fit.is_zero_to_order);
    }
    SUBCASE("linearity") {
        const auto fit = fit_weight4_level2(eisenstein_g4(32) + g2_level2_square(32));
        CHECK(fit.a == Rational(1));
        CHECK(fit.b == Rational(1));
        CHECK(fit.is_zero_to_order);
    }
    SUBCASE("the E-series fits to a = b = 0 with zero residual") {
        const auto fit = fit_weight4_level2(weight4_level2_e_series(64));
        CHECK(fit.a == Rational(0));
        CHECK(fit.b == Rational(0));
        CHECK(fit.is_zero_to_order);
        CHECK(fit.residual.order() == 64);
    }
    SUBCASE("reconstruction: a*G4 + b*G2_4 + residual = f") {
        yzq::test::RandomSeries rng(0x5eed5008);
        for (int i = 0; i < 50; ++i) {
            const PowerSeries f = rng.series(1, 24);
            const auto fit = fit_weight4_level2(f);
            const PowerSeries rebuilt = fit.a * eisenstein_g4(f.order()) +
                                        fit.b * g2_level2_square(f.order()) + fit.residual;
            CHECK(rebuilt == f);
            CHECK(fit.residual[0] == Rational(0));
            CHECK(fit.residual[1] == Rational(0));
        }
    }
    SUBCASE("order 0 is not enough") {
        CHECK_THROWS_AS(fit_weight4_level2(PowerSeries::one(0)), yzq::InsufficientOrder);
    }
}
