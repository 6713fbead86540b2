#pragma once

#include "yzq/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace yzq {

struct SeriesComparison;

/// Truncated formal power series in t over Rational.
///
/// A series of order N stores exact coefficients for degrees 0..N.
/// Degrees above N are *unknown*, never implicitly zero. Every binary
/// operation propagates that contract: the result order is the minimum of
/// the operand orders, adjusted where an operation genuinely knows more
/// (substitution t -> t^m) or less (division after cancelling a common
/// power of t). Values are immutable after construction.
class PowerSeries {
public:
    /// Zero series of the given order (all known coefficients are 0).
    explicit PowerSeries(int order);

    /// Takes ownership of the coefficient vector; order = size - 1.
    explicit PowerSeries(std::vector<Rational> coefficients);

    static PowerSeries constant(const Rational& value, int order);
    static PowerSeries one(int order) { return constant(Rational(1), order); }
    /// c * t^degree as a series of the given order; requires degree <= order.
    static PowerSeries monomial(const Rational& coefficient, int degree, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of t^k, 0 <= k <= order(); throws std::out_of_range beyond.
    const Rational& operator[](int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Forgets coefficients above new_order (new_order <= order).
    PowerSeries truncated(int new_order) const;

    /// Lowest degree with a nonzero coefficient, or nullopt when the series
    /// is zero through its order.
    std::optional<int> valuation() const;

    bool is_zero() const { return !valuation().has_value(); }

    /// The logarithmic derivative operator t*d/dt: coefficient k maps to k*c_k.
    PowerSeries theta() const;

    /// Substitution t -> t^m for m >= 1. Every coefficient of the result up
    /// to degree m*order() is exactly determined, so the order grows to
    /// m*order().
    PowerSeries compose_power(int m) const;

    /// Splits into (even-degree part, odd-degree part); both keep the order
    /// and sum back to the original series.
    std::pair<PowerSeries, PowerSeries> even_odd() const;

    /// Integer power by repeated squaring; order preserved. Negative
    /// exponents require a unit (nonzero constant term).
    PowerSeries pow(std::int64_t exponent) const;

    PowerSeries operator-() const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    /// Cauchy product truncated to min(order(a), order(b)).
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& f);

    /// Exact division. Either b is a unit, or b = t^v * unit and a is
    /// divisible by t^v as well; then the common factor cancels and the
    /// result order drops by v. Throws DivisionByNonUnit otherwise.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

private:
    std::vector<Rational> coeffs_;
};

/// Result of comparing two series over the degree range both actually know.
struct SeriesComparison {
    int order_compared = -1;
    std::optional<int> first_mismatch;
    bool equal() const { return !first_mismatch.has_value(); }
};

SeriesComparison compare(const PowerSeries& a, const PowerSeries& b);

/// Equality up to the smaller of the two orders.
inline bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return compare(a, b).equal();
}
inline bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

/// Truncation to the given order of prod_{d>=1} (1 - t^d)^exponent.
/// Factors with d > order cannot touch degrees <= order, so the finite
/// product over d <= order is exact.
PowerSeries product_one_minus(std::int64_t exponent, int order);

} // namespace yzq
