#include "yzq/divisor_sums.hpp"

#include <stdexcept>
#include <string>

namespace yzq {

DivisorSumTable::DivisorSumTable(int n_max) : n_max_(n_max) {
    if (n_max < 1) throw std::invalid_argument("DivisorSumTable: n_max must be >= 1");
    sigma_.assign(static_cast<std::size_t>(n_max) + 1, 0);
    sigma3_.assign(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::int64_t k = 1; k <= n_max; ++k) {
        const std::int64_t k3 = k * k * k;
        for (std::int64_t d = k; d <= n_max; d += k) {
            sigma_[static_cast<std::size_t>(d)] += k;
            sigma3_[static_cast<std::size_t>(d)] += k3;
        }
    }
}

std::int64_t DivisorSumTable::sigma(int d) const {
    if (d < 1 || d > n_max_)
        throw std::out_of_range("DivisorSumTable::sigma: d = " + std::to_string(d) +
                                " outside 1.." + std::to_string(n_max_));
    return sigma_[static_cast<std::size_t>(d)];
}

std::int64_t DivisorSumTable::sigma3(int d) const {
    if (d < 1 || d > n_max_)
        throw std::out_of_range("DivisorSumTable::sigma3: d = " + std::to_string(d) +
                                " outside 1.." + std::to_string(n_max_));
    return sigma3_[static_cast<std::size_t>(d)];
}

} // namespace yzq
