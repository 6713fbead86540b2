#pragma once

#include "yzq/power_series.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace yzq {

/// Every named generating function the engine can produce. Each id resolves
/// to exactly one constructor; Q is the difference M0 - P0.
enum class SeriesId {
    N0,
    P0,
    M0,
    Q,
    G2,
    Ge,
    Go,
    G4,
    G2Level2Sq,
    M1TauF,
    P1Tau2F,
    MV12,
    PU12,
    Ode1LhsM,
    Ode1LhsP,
};

struct SeriesInfo {
    SeriesId id;
    std::string_view name;       // stable external spelling, used by the CLI and cache files
    std::string_view definition; // the defining formula
};

/// All registered series in a fixed, deterministic order.
std::span<const SeriesInfo> registered_series();

const SeriesInfo& series_info(SeriesId id);

std::optional<SeriesId> parse_series_id(std::string_view name);

/// Builds the series from scratch at the given order.
PowerSeries build_series(SeriesId id, int order);

/// Memoizing cache keyed by (id, order). Results are deterministic, so
/// sharing one instance across threads (guarded here) or recomputing per
/// thread give identical coefficients.
class SeriesCache {
public:
    PowerSeries get(SeriesId id, int order);

private:
    std::mutex mutex_;
    std::map<std::pair<SeriesId, int>, PowerSeries> store_;
};

} // namespace yzq
