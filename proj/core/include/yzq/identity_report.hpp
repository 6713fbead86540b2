#pragma once

#include "yzq/power_series.hpp"

#include <optional>
#include <string>
#include <utility>

namespace yzq {

/// Outcome of checking one coefficient identity to a given order. The check
/// passes exactly when the residual is identically zero through
/// order_checked, in which case first_failure_degree is absent.
struct IdentityReport {
    std::string identity_name;
    int order_checked = -1;
    PowerSeries residual{0};
    bool passed = false;
    std::optional<int> first_failure_degree;

    static IdentityReport from_residual(std::string name, PowerSeries residual_series) {
        IdentityReport r;
        r.identity_name = std::move(name);
        r.order_checked = residual_series.order();
        r.first_failure_degree = residual_series.valuation();
        r.passed = !r.first_failure_degree.has_value();
        r.residual = std::move(residual_series);
        return r;
    }

    static IdentityReport from_comparison(std::string name, const PowerSeries& lhs,
                                          const PowerSeries& rhs) {
        return from_residual(std::move(name), lhs - rhs);
    }
};

} // namespace yzq
