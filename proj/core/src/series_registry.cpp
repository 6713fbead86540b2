#include "yzq/series_registry.hpp"

#include "yzq/eisenstein.hpp"
#include "yzq/pipeline.hpp"

#include <array>
#include <stdexcept>

namespace yzq {

namespace {

constexpr std::array<SeriesInfo, 15> kSeries = {{
    {SeriesId::N0, "N0", "prod_{d>=1} (1 - t^d)^-24"},
    {SeriesId::P0, "P0", "P0[d] = N0[2d-3] (zero when 2d-3 < 0)"},
    {SeriesId::M0, "M0", "P0 + (1/8) N0(t^2)"},
    {SeriesId::Q, "Q", "M0 - P0 = (1/8) N0(t^2)"},
    {SeriesId::G2, "G2", "-1/24 + sum sigma(d) t^d"},
    {SeriesId::Ge, "Ge", "even-degree part of G2"},
    {SeriesId::Go, "Go", "odd-degree part of G2"},
    {SeriesId::G4, "G4", "1/24 + 10 sum sigma3(d) t^d"},
    {SeriesId::G2Level2Sq, "G2_4", "[G2(t) - 2 G2(t^2)]^2"},
    {SeriesId::M1TauF, "M1_tauF", "(1/3) theta(M0) - (2/3) M0"},
    {SeriesId::P1Tau2F, "P1_tau2F", "(1/3) theta(P0) - (2/3) P0"},
    {SeriesId::MV12, "MV_1_2", "M1_tauF - 4 G2 M0"},
    {SeriesId::PU12, "PU_1_2", "P1_tau2F - 4 G2 P0"},
    {SeriesId::Ode1LhsM, "ODE1_LHS_M",
     "(20/3) G2 theta(M0) - (64 G2^2 + (40/3) G2 - 8 theta(G2)) M0 (prediction only)"},
    {SeriesId::Ode1LhsP, "ODE1_LHS_P",
     "(20/3) G2 theta(P0) - (64 G2^2 + (40/3) G2 - 8 theta(G2)) P0 (prediction only)"},
}};

} // namespace

std::span<const SeriesInfo> registered_series() { return kSeries; }

const SeriesInfo& series_info(SeriesId id) {
    for (const auto& info : kSeries)
        if (info.id == id) return info;
    throw std::logic_error("series_info: unregistered id");
}

std::optional<SeriesId> parse_series_id(std::string_view name) {
    for (const auto& info : kSeries)
        if (info.name == name) return info.id;
    return std::nullopt;
}

PowerSeries build_series(SeriesId id, int order) {
    switch (id) {
        case SeriesId::N0: return n0_series(order);
        case SeriesId::P0: return p0_series(order);
        case SeriesId::M0: return m0_series(order);
        case SeriesId::Q: return m0_series(order) - p0_series(order);
        case SeriesId::G2: return eisenstein_g2(order);
        case SeriesId::Ge: return g2_even_odd(order).first;
        case SeriesId::Go: return g2_even_odd(order).second;
        case SeriesId::G4: return eisenstein_g4(order);
        case SeriesId::G2Level2Sq: return g2_level2_square(order);
        case SeriesId::M1TauF: return m1_tau_f(order);
        case SeriesId::P1Tau2F: return p1_tau_2f(order);
        case SeriesId::MV12: return mv12_series(order);
        case SeriesId::PU12: return pu12_series(order);
        case SeriesId::Ode1LhsM: return ode1_lhs(order, OdeSide::M);
        case SeriesId::Ode1LhsP: return ode1_lhs(order, OdeSide::P);
    }
    throw std::logic_error("build_series: unregistered id");
}

PowerSeries SeriesCache::get(SeriesId id, int order) {
    {
        std::lock_guard lock(mutex_);
        auto it = store_.find({id, order});
        if (it != store_.end()) return it->second;
    }
    PowerSeries s = build_series(id, order);
    std::lock_guard lock(mutex_);
    return store_.try_emplace({id, order}, std::move(s)).first->second;
}

} // namespace yzq
