#include "yzq/power_series.hpp"

#include "yzq/eisenstein.hpp"
#include "yzq/pipeline.hpp"

#include "../support/random_series.hpp"

#include <doctest.h>
#include <gmpxx.h>

#include <future>

using yzq::PowerSeries;
using yzq::Rational;
using yzq::test::negate_variable;
using yzq::test::RandomSeries;

TEST_CASE("ring axioms hold exactly on random series") {
    RandomSeries rng(0x5eed5002);
    for (int i = 0; i < 300; ++i) {
        const PowerSeries a = rng.series();
        const PowerSeries b = rng.series();
        const PowerSeries c = rng.series();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + PowerSeries(a.order()) == a);
        CHECK(a * PowerSeries::one(a.order()) == a);
    }
}

TEST_CASE("division inverts multiplication on units") {
    RandomSeries rng(0x5eed5003);
    for (int i = 0; i < 300; ++i) {
        const PowerSeries a = rng.series();
        const PowerSeries b = rng.unit_series();
        CHECK((a / b) * b == a);
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("theta is a derivation") {
    RandomSeries rng(0x5eed5004);
    for (int i = 0; i < 300; ++i) {
        const PowerSeries f = rng.series();
        const PowerSeries g = rng.series();
        CHECK((f * g).theta() == f.theta() * g + f * g.theta());
    }
}

TEST_CASE("monomial substitution is a ring homomorphism") {
    RandomSeries rng(0x5eed5005);
    for (int i = 0; i < 200; ++i) {
        const PowerSeries f = rng.series(0, 16);
        const PowerSeries g = rng.series(0, 16);
        const int m = rng.uniform(1, 4);
        CHECK((f * g).compose_power(m) == f.compose_power(m) * g.compose_power(m));
        CHECK((f + g).compose_power(m) == f.compose_power(m) + g.compose_power(m));
    }
}

TEST_CASE("even/odd split laws") {
    RandomSeries rng(0x5eed5006);
    for (int i = 0; i < 300; ++i) {
        const PowerSeries f = rng.series();
        const auto [even, odd] = f.even_odd();
        CHECK(even + odd == f);
        CHECK(negate_variable(even) == even);
        CHECK(negate_variable(odd) == -odd);
        for (int k = 0; k <= f.order(); ++k) {
            if (k % 2 == 0)
                CHECK(odd[k].is_zero());
            else
                CHECK(even[k].is_zero());
        }
    }
}

TEST_CASE("every coefficient of every random product stays normalized") {
    RandomSeries rng(0x5eed5007);
    for (int i = 0; i < 50; ++i) {
        const PowerSeries product = rng.series(4, 16) * rng.series(4, 16);
        for (const Rational& c : product.coefficients()) {
            CHECK(c.denominator() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), c.numerator().get_mpz_t(), c.denominator().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("independent series evaluate safely in parallel") {
    auto build = [](int which) {
        switch (which) {
            case 0: return yzq::n0_series(64);
            case 1: return yzq::eisenstein_g2(64);
            case 2: return yzq::m0_series(64);
            default: return yzq::ode3_solve(Rational(1, 8), 64);
        }
    };
    std::vector<std::future<PowerSeries>> first, second;
    for (int which = 0; which < 4; ++which) {
        first.push_back(std::async(std::launch::async, build, which));
        second.push_back(std::async(std::launch::async, build, which));
    }
    for (int which = 0; which < 4; ++which)
        CHECK(first[static_cast<std::size_t>(which)].get() ==
              second[static_cast<std::size_t>(which)].get());
}
