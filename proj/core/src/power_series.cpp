#include "yzq/power_series.hpp"

#include "yzq/errors.hpp"

#include <stdexcept>
#include <string>

namespace yzq {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient vector");
}

PowerSeries PowerSeries::constant(const Rational& value, int order) {
    PowerSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

PowerSeries PowerSeries::monomial(const Rational& coefficient, int degree, int order) {
    if (degree < 0 || degree > order)
        throw std::invalid_argument("PowerSeries::monomial: degree outside 0..order");
    PowerSeries s(order);
    s.coeffs_[static_cast<std::size_t>(degree)] = coefficient;
    return s;
}

const Rational& PowerSeries::operator[](int k) const {
    if (k < 0 || k > order())
        throw std::out_of_range("PowerSeries: coefficient " + std::to_string(k) +
                                " beyond order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(k)];
}

PowerSeries PowerSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("PowerSeries::truncated: order outside 0..order");
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return PowerSeries(std::move(c));
}

std::optional<int> PowerSeries::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (!coeffs_[static_cast<std::size_t>(k)].is_zero()) return k;
    return std::nullopt;
}

PowerSeries PowerSeries::theta() const {
    std::vector<Rational> c(coeffs_.size());
    for (int k = 0; k <= order(); ++k)
        c[static_cast<std::size_t>(k)] = Rational(k) * coeffs_[static_cast<std::size_t>(k)];
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::compose_power(int m) const {
    if (m < 1) throw std::invalid_argument("PowerSeries::compose_power: m must be >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(order()) * m + 1);
    for (int k = 0; k <= order(); ++k)
        c[static_cast<std::size_t>(k) * m] = coeffs_[static_cast<std::size_t>(k)];
    return PowerSeries(std::move(c));
}

std::pair<PowerSeries, PowerSeries> PowerSeries::even_odd() const {
    std::vector<Rational> even(coeffs_.size()), odd(coeffs_.size());
    for (int k = 0; k <= order(); ++k)
        (k % 2 == 0 ? even : odd)[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return {PowerSeries(std::move(even)), PowerSeries(std::move(odd))};
}

PowerSeries PowerSeries::pow(std::int64_t exponent) const {
    if (exponent == 0) return one(order());
    PowerSeries base = *this;
    if (exponent < 0) {
        base = one(order()) / base; // throws DivisionByNonUnit on non-unit
        exponent = -exponent;
    }
    PowerSeries result = one(order());
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

PowerSeries PowerSeries::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (int k = 0; k <= order(); ++k) c[static_cast<std::size_t>(k)] = -coeffs_[static_cast<std::size_t>(k)];
    return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[k] + b[k];
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[k] - b[k];
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue; // sparse operands are common (t -> t^m images)
        for (int j = 0, k = i; k <= n; ++j, ++k) {
            if (b[j].is_zero()) continue;
            c[static_cast<std::size_t>(k)] += a[i] * b[j];
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const Rational& c, const PowerSeries& f) {
    std::vector<Rational> out(static_cast<std::size_t>(f.order()) + 1);
    for (int k = 0; k <= f.order(); ++k) out[static_cast<std::size_t>(k)] = c * f[k];
    return PowerSeries(std::move(out));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    auto vb = b.valuation();
    if (!vb)
        throw DivisionByNonUnit("series division: divisor is zero through order " +
                                std::to_string(b.order()));
    const int v = *vb;
    if (v > 0) {
        auto va = a.valuation();
        if (va && *va < v)
            throw DivisionByNonUnit("series division: divisor vanishes to order " +
                                    std::to_string(v) + " but dividend only to " +
                                    std::to_string(*va));
    }
    const int n = std::min(a.order(), b.order()) - v;
    if (n < 0)
        throw DivisionByNonUnit("series division: cancelling t^" + std::to_string(v) +
                                " leaves no known coefficients");

    // Long division of the shifted series; b[v] is a nonzero (hence
    // invertible) rational.
    std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
    const Rational& lead = b[v];
    for (int k = 0; k <= n; ++k) {
        Rational acc = (v + k <= a.order()) ? a[v + k] : Rational(0);
        for (int j = 1; j <= k; ++j) {
            if (v + j > b.order()) break;
            acc -= b[v + j] * q[static_cast<std::size_t>(k - j)];
        }
        q[static_cast<std::size_t>(k)] = acc / lead;
    }
    return PowerSeries(std::move(q));
}

SeriesComparison compare(const PowerSeries& a, const PowerSeries& b) {
    SeriesComparison result;
    result.order_compared = std::min(a.order(), b.order());
    for (int k = 0; k <= result.order_compared; ++k) {
        if (a[k] != b[k]) {
            result.first_mismatch = k;
            break;
        }
    }
    return result;
}

PowerSeries product_one_minus(std::int64_t exponent, int order) {
    if (order < 0) throw std::invalid_argument("product_one_minus: negative order");
    // Multiply out prod_{d<=order} (1 - t^d) in place, then raise to the
    // shared exponent. Multiplying by (1 - t^d) is c[k] -= c[k-d], high to low.
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(1);
    for (int d = 1; d <= order; ++d)
        for (int k = order; k >= d; --k)
            c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - d)];
    return PowerSeries(std::move(c)).pow(exponent);
}

} // namespace yzq
