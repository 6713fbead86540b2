#include "yzq/pipeline.hpp"

#include "yzq/eisenstein.hpp"
#include "yzq/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace yzq {

namespace {

// f(t^2) truncated back to the requested order.
PowerSeries substitute_t2(const PowerSeries& f, int order) {
    return f.compose_power(2).truncated(order);
}

int half_order(int order) { return (order + 1) / 2; }

} // namespace

PowerSeries n0_series(int order) {
    return product_one_minus(-24, order);
}

PowerSeries primitive_ode_residual(const PowerSeries& g2_t2, const PowerSeries& n0_t2) {
    return n0_t2.theta() - Rational(48) * (g2_t2 * n0_t2) - Rational(2) * n0_t2;
}

IdentityReport primitive_ode_check(int order) {
    if (order < 2) throw std::invalid_argument("primitive_ode_check: order must be >= 2");
    const PowerSeries g2_t2 = substitute_t2(eisenstein_g2(half_order(order)), order);
    const PowerSeries n0_t2 = substitute_t2(n0_series(half_order(order)), order);
    return IdentityReport::from_residual("primitive-class-ode",
                                         primitive_ode_residual(g2_t2, n0_t2));
}

PowerSeries p0_series(int order) {
    if (order < 0) throw std::invalid_argument("p0_series: negative order");
    const PowerSeries n0 = n0_series(std::max(0, 2 * order - 3));
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    // Coefficients whose source index 2d - 3 is negative correspond to
    // classes with negative fiber degree and are zero.
    for (int d = 0; d <= order; ++d)
        if (2 * d - 3 >= 0) c[static_cast<std::size_t>(d)] = n0[2 * d - 3];
    return PowerSeries(std::move(c));
}

PowerSeries m0_series(int order) {
    const PowerSeries q = Rational(1, 8) * substitute_t2(n0_series(half_order(order)), order);
    return p0_series(order) + q;
}

namespace {

PowerSeries genus1_tau(const PowerSeries& x) {
    return Rational(1, 3) * x.theta() - Rational(2, 3) * x;
}

} // namespace

PowerSeries m1_tau_f(int order) { return genus1_tau(m0_series(order)); }
PowerSeries p1_tau_2f(int order) { return genus1_tau(p0_series(order)); }

PowerSeries mv12_series(int order) {
    const PowerSeries m0 = m0_series(order);
    return genus1_tau(m0) - Rational(4) * (eisenstein_g2(order) * m0);
}

PowerSeries pu12_series(int order) {
    const PowerSeries p0 = p0_series(order);
    return genus1_tau(p0) - Rational(4) * (eisenstein_g2(order) * p0);
}

PowerSeries ode1_lhs(int order, OdeSide side) {
    const PowerSeries x = (side == OdeSide::M) ? m0_series(order) : p0_series(order);
    const PowerSeries g2 = eisenstein_g2(order);
    const PowerSeries bracket =
        Rational(64) * (g2 * g2) + Rational(40, 3) * g2 - Rational(8) * g2.theta();
    return Rational(20, 3) * (g2 * x.theta()) - bracket * x;
}

namespace {

// 384 Ge Go + 40 Go - 24 theta(Go), the unnormalized zeroth-order
// coefficient of the odd-part ODE.
PowerSeries ode3_bracket(const PowerSeries& ge, const PowerSeries& go) {
    return Rational(384) * (ge * go) + Rational(40) * go - Rational(24) * go.theta();
}

} // namespace

IdentityReport ode3_check(const PowerSeries& q) {
    const auto [ge, go] = g2_even_odd(q.order());
    const PowerSeries residual =
        Rational(20) * (go * q.theta()) - ode3_bracket(ge, go) * q;
    return IdentityReport::from_residual("odd-part-ode", residual);
}

PowerSeries ode3_coefficient_series(const PowerSeries& ge, const PowerSeries& go) {
    const PowerSeries c = ode3_bracket(ge, go) / (Rational(20) * go);
    if (!c[0].is_zero() || (c.order() >= 1 && !c[1].is_zero()))
        throw MalformedOde("odd-part ODE: low-degree cancellations failed (c[0] = " +
                           c[0].str() + ", c[1] = " + (c.order() >= 1 ? c[1].str() : "-") +
                           "); the sigma(0) = -1/24 convention is broken");
    return c;
}

PowerSeries ode3_coefficient_series(int order) {
    if (order < 0) throw std::invalid_argument("ode3_coefficient_series: negative order");
    // Dividing by 20 Go cancels one power of t, so work one degree higher.
    const auto [ge, go] = g2_even_odd(order + 1);
    return ode3_coefficient_series(ge, go);
}

PowerSeries ode3_solve(const Rational& q0, int order) {
    const PowerSeries c = ode3_coefficient_series(order);
    std::vector<Rational> q(static_cast<std::size_t>(order) + 1);
    q[0] = q0;
    for (int n = 1; n <= order; ++n) {
        Rational acc;
        for (int k = 2; k <= n; ++k) acc += c[k] * q[static_cast<std::size_t>(n - k)];
        q[static_cast<std::size_t>(n)] = acc / Rational(n);
    }
    return PowerSeries(std::move(q));
}

IdentityReport ode_vs_product_check(int order) {
    if (order < 2) throw std::invalid_argument("ode_vs_product_check: order must be >= 2");
    const PowerSeries recursion_route = ode3_solve(Rational(1, 8), order);
    const PowerSeries product_route =
        Rational(1, 8) * substitute_t2(n0_series(half_order(order)), order);
    return IdentityReport::from_comparison("ode-route-vs-product-route", recursion_route,
                                           product_route);
}

std::vector<YauZaslowEntry> yau_zaslow_index2_table(int k_max) {
    if (k_max < 1) throw std::invalid_argument("yau_zaslow_index2_table: k_max must be >= 1");
    const PowerSeries n0 = n0_series(4 * k_max - 3);
    const PowerSeries m0_via_ode = p0_series(2 * k_max) + ode3_solve(Rational(1, 8), 2 * k_max);

    std::vector<YauZaslowEntry> table;
    table.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        YauZaslowEntry entry;
        entry.d = 4 * k - 3;
        // The double cover of each primitive A/2 curve contributes 1/8 to
        // the family invariant but nothing to the curve count.
        entry.count = m0_via_ode[2 * k] - Rational(1, 8) * n0[k];
        entry.expected = n0[entry.d];
        entry.matches = (entry.count == entry.expected);
        table.push_back(std::move(entry));
    }
    return table;
}

} // namespace yzq
