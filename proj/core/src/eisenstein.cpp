#include "yzq/eisenstein.hpp"

#include "yzq/divisor_sums.hpp"
#include "yzq/errors.hpp"

#include <stdexcept>
#include <vector>

namespace yzq {

PowerSeries eisenstein_g2(int order) {
    if (order < 0) throw std::invalid_argument("eisenstein_g2: negative order");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(-1, 24);
    if (order >= 1) {
        DivisorSumTable table(order);
        for (int d = 1; d <= order; ++d) c[static_cast<std::size_t>(d)] = Rational(table.sigma(d));
    }
    return PowerSeries(std::move(c));
}

std::pair<PowerSeries, PowerSeries> g2_even_odd(int order) {
    return eisenstein_g2(order).even_odd();
}

PowerSeries eisenstein_g4(int order) {
    if (order < 0) throw std::invalid_argument("eisenstein_g4: negative order");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(1, 24);
    if (order >= 1) {
        DivisorSumTable table(order);
        for (int d = 1; d <= order; ++d)
            c[static_cast<std::size_t>(d)] = Rational(10) * Rational(table.sigma3(d));
    }
    return PowerSeries(std::move(c));
}

PowerSeries g2_level2_square(int order) {
    const PowerSeries g2 = eisenstein_g2(order);
    const PowerSeries level2 = g2 - Rational(2) * g2.compose_power(2);
    return level2 * level2;
}

PowerSeries quasimodular_combination(int order) {
    const PowerSeries g2 = eisenstein_g2(order);
    const PowerSeries g2_t2 = g2.compose_power(2); // order 2*order, exact
    return Rational(2) * g2_t2.theta()             // 4 t^2 G2'(t^2)
           - Rational(32) * (g2_t2 * g2_t2)
           + Rational(40) * (g2 * g2_t2)
           - Rational(8) * (g2 * g2)
           + g2.theta();                           // t G2'(t)
}

IdentityReport quasimodular_relation_check(int order) {
    if (order < 2) throw std::invalid_argument("quasimodular_relation_check: order must be >= 2");
    return IdentityReport::from_residual("quasimodular-relation", quasimodular_combination(order));
}

PowerSeries weight4_level2_e_series(int order) {
    return -quasimodular_combination(order);
}

FormFitResult fit_weight4_level2(const PowerSeries& f) {
    if (f.order() < 1)
        throw InsufficientOrder("fit_weight4_level2: need coefficients at t^0 and t^1");

    const PowerSeries g4 = eisenstein_g4(f.order());
    const PowerSeries g2_4 = g2_level2_square(f.order());

    // Cramer's rule on  [g4[0] g2_4[0]; g4[1] g2_4[1]] (a, b)^T = (f[0], f[1])^T.
    const Rational det = g4[0] * g2_4[1] - g2_4[0] * g4[1];
    FormFitResult fit;
    fit.a = (f[0] * g2_4[1] - g2_4[0] * f[1]) / det;
    fit.b = (g4[0] * f[1] - f[0] * g4[1]) / det;
    fit.residual = f - fit.a * g4 - fit.b * g2_4;
    fit.is_zero_to_order = fit.residual.is_zero();
    return fit;
}

} // namespace yzq
