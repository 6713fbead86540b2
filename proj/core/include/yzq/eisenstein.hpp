#pragma once

#include "yzq/identity_report.hpp"
#include "yzq/power_series.hpp"
#include "yzq/rational.hpp"

#include <utility>

namespace yzq {

/// Weight-2 Eisenstein series G2 = -1/24 + sum_{d>=1} sigma(d) t^d.
PowerSeries eisenstein_g2(int order);

/// (Ge, Go): even- and odd-degree parts of G2. Ge carries the -1/24
/// constant term; Go has valuation exactly 1 since sigma(1) = 1.
std::pair<PowerSeries, PowerSeries> g2_even_odd(int order);

/// Weight-4 series G4 = 1/24 + 10 sum_{d>=1} sigma3(d) t^d.
PowerSeries eisenstein_g4(int order);

/// G2^(4) = [G2(t) - 2 G2(t^2)]^2, one of the two generators of the
/// weight-4 forms of level 2. Assembled from G2 by substitution, scaling
/// and squaring, never from a hard-coded expansion.
PowerSeries g2_level2_square(int order);

/// The quasi-modular combination
///   4 t^2 G2'(t^2) - 32 G2^2(t^2) + 40 G2(t) G2(t^2) - 8 G2^2(t) + t G2'(t),
/// which vanishes identically. Derivatives are realized through
/// theta = t d/dt: t G2'(t) = theta(G2) and 4 t^2 G2'(t^2) = 2 theta(G2(t^2)).
PowerSeries quasimodular_combination(int order);

/// Checks that the combination above is zero through the given order
/// (requires order >= 2 so both substituted terms contribute).
IdentityReport quasimodular_relation_check(int order);

/// The same combination written as a weight-4 level-2 form:
///   E = -2 theta(G2(t^2)) + 32 G2^2(t^2) - 40 G2 G2(t^2) + 8 G2^2 - theta(G2),
/// the series fed to the basis fit below.
PowerSeries weight4_level2_e_series(int order);

/// Result of expressing a series in the basis {G4, G2^(4)} of weight-4
/// level-2 forms: f = a*G4 + b*G2_4 + residual, with (a, b) pinned by the
/// coefficients at t^0 and t^1 and the residual carrying everything else.
struct FormFitResult {
    Rational a;
    Rational b;
    PowerSeries residual{0};
    bool is_zero_to_order = false;
};

/// Solves the 2x2 system from coefficients 0 and 1 (the generator matrix
/// [[1/24, 1/576], [10, 1/12]] has determinant -1/72, so the solution is
/// unique) and computes the exact residual to order(f).
/// Throws InsufficientOrder when order(f) < 1.
FormFitResult fit_weight4_level2(const PowerSeries& f);

} // namespace yzq
