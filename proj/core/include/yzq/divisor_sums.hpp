#pragma once

#include <cstdint>
#include <vector>

namespace yzq {

/// Sieve-built table of sigma(d) = sum of divisors and sigma3(d) = sum of
/// cubed divisors for 1 <= d <= n_max. The d = 0 value is deliberately not
/// stored: the -1/24 constant-term convention belongs to the Eisenstein
/// series alone and must not leak into integer convolutions.
class DivisorSumTable {
public:
    explicit DivisorSumTable(int n_max);

    int n_max() const { return n_max_; }
    std::int64_t sigma(int d) const;
    std::int64_t sigma3(int d) const;

private:
    int n_max_;
    std::vector<std::int64_t> sigma_;
    std::vector<std::int64_t> sigma3_;
};

} // namespace yzq
