#include "yzq/e0_invariants.hpp"

#include "yzq/errors.hpp"

#include <stdexcept>
#include <utility>

namespace yzq {

Rational SequenceFamily::at(int d) const {
    if (d < 0) throw std::invalid_argument("SequenceFamily::at: negative index");
    switch (support) {
        case FamilySupport::ZeroOnly: return d == 0 ? rule(d) : Rational(0);
        case FamilySupport::PositiveOnly: return d >= 1 ? rule(d) : Rational(0);
        case FamilySupport::NonNegative: return rule(d);
    }
    return Rational(0);
}

void FamilyCatalog::add(std::string id, FamilySupport support, std::function<Rational(int)> rule,
                        std::string note) {
    SequenceFamily fam{id, support, std::move(rule), std::move(note)};
    auto [it, inserted] = families_.emplace(std::move(id), std::move(fam));
    if (!inserted) throw std::logic_error("FamilyCatalog: duplicate id " + it->first);
}

FamilyCatalog::FamilyCatalog(int d_max)
    : d_max_(d_max), table_(std::make_shared<const DivisorSumTable>(std::max(1, d_max))) {
    if (d_max < 0) throw std::invalid_argument("FamilyCatalog: negative d_max");
    const auto t = table_;

    const auto constant = [](std::int64_t num, std::int64_t den = 1) {
        return [num, den](int) { return Rational(num, den); };
    };
    const auto zero = [](int) { return Rational(0); };
    const auto sigma_times = [t](std::int64_t c) {
        return [t, c](int d) { return Rational(c) * Rational(t->sigma(d)); };
    };
    const auto d_sigma_times = [t](std::int64_t c) {
        return [t, c](int d) { return Rational(c) * Rational(d) * Rational(t->sigma(d)); };
    };

    // --- Rigid genus-0 counts (sections of E(0) and their double covers).
    // The 1/2 below is the branched-cover count with ramification pattern
    // (2,1,2) weighted by the contact multiplicity.
    add("Phi[0,0](F,S,1)", FamilySupport::ZeroOnly, constant(1), "triple intersection F.S.1");
    add("Phi[S,0](pt)", FamilySupport::ZeroOnly, constant(1), "section through a point");
    add("Phi[S,0](g1,g2)", FamilySupport::ZeroOnly, constant(1), "section meeting both loops");
    add("PhiV[S,0,(1)](C_pt)", FamilySupport::ZeroOnly, constant(1), "1");
    add("PhiV[S,0,(1)](pt;C_F)", FamilySupport::ZeroOnly, constant(1), "1");
    add("PhiV[S,0,(1)](g1;C_g2)", FamilySupport::ZeroOnly, constant(1), "1");
    add("PhiV[S,0,(1)](g1,g2;C_F)", FamilySupport::ZeroOnly, constant(1), "1");
    add("PhiV[2S,0,(2)](tauF;C_pt)", FamilySupport::ZeroOnly, constant(1, 2),
        "1/2, double covers with ramification pattern (2,1,2)");
    add("PhiV[2S,0,(2)](pt,tauF;C_F)", FamilySupport::ZeroOnly, constant(1),
        "1, ramification pattern (1,2,2)");
    add("Phi[2S,0](tauF^2,pt)", FamilySupport::ZeroOnly, constant(1), "1");
    add("Phi[2S,0](tauF^2,g1,g2)", FamilySupport::ZeroOnly, constant(2), "2");
    add("Phi[S,0](psiF,S,F^2)", FamilySupport::ZeroOnly, constant(1), "1");
    add("Phi[S,0](psiF,pt,F,1)", FamilySupport::ZeroOnly, constant(1), "1");
    add("Phi[2S,0](psiF^2,pt,F^2)", FamilySupport::ZeroOnly, constant(2), "2");
    add("Phi[S,0](psiF,1,g1,g2)", FamilySupport::ZeroOnly, constant(1), "1");
    add("Phi[S,0](tauF,F,S)", FamilySupport::ZeroOnly, constant(1), "1");
    add("Phi[S,0](tauF,pt,F,1)", FamilySupport::ZeroOnly, constant(1), "1");
    add("PhiV[2S,0,(1,1)](C_pt.F;tauF^2)", FamilySupport::ZeroOnly, constant(1), "1");
    add("PhiV[2S,0,(1,1)](C_-g1.g2;tauF^2)", FamilySupport::ZeroOnly, constant(1), "1");

    // --- Vanishing counts. A degree-1 cover cannot ramify, sections cannot
    // pass through two generic points, and genus-0 maps in class 2S miss
    // generic loop representatives.
    add("Phi[S,0](tauF)", FamilySupport::NonNegative, zero, "0");
    add("PhiV[S,0,(1)](tauF;C_F)", FamilySupport::NonNegative, zero, "0");
    add("PhiV[2S,0,(2)](tauF^2;C_F)", FamilySupport::NonNegative, zero,
        "0, no degree-2 cover with ramification pattern (2,2,2)");
    add("PhiV[S+dF,1,(1)](g1,g2;C_pt)", FamilySupport::NonNegative, zero, "0");
    add("Phi[dF,1](psiF,S,1)", FamilySupport::NonNegative, zero, "0");
    add("PhiV[S+dF,1,(1)](C_F;tauF^2)", FamilySupport::NonNegative, zero, "0");
    add("PhiV[2S,0,(2)](C_pt;pt)", FamilySupport::NonNegative, zero, "0");
    add("PhiV[2S,0,(2)](C_pt;g1,g2)", FamilySupport::NonNegative, zero, "0");
    add("PhiV[2S,0,(1,1)](C_pt^2;pt)", FamilySupport::NonNegative, zero, "0");
    add("PhiV[2S,0,(1,1)](C_pt^2;g1,g2)", FamilySupport::NonNegative, zero, "0");
    add("PhiV[2S,0,(1,1)](C_pt^2;tauF)", FamilySupport::NonNegative, zero, "0");

    // --- Divisor-sum families. The d = 0 members are invariants on a rigid
    // section and vanish, hence the d >= 1 support with integer sigma.
    add("Phi[S+dF,1](tauF,pt)", FamilySupport::PositiveOnly, sigma_times(2), "2 sigma(d)");
    add("PhiV[S+dF,1,(1)](tauF;C_pt)", FamilySupport::PositiveOnly, sigma_times(2), "2 sigma(d)");
    add("PhiV[S+dF,1,(1)](tauF,pt;C_F)", FamilySupport::PositiveOnly, sigma_times(2),
        "2 sigma(d)");
    add("Phi[dF,1](S)", FamilySupport::PositiveOnly, sigma_times(2), "2 sigma(d)");
    add("Phi[S+dF,1](psiF,pt)", FamilySupport::PositiveOnly, sigma_times(2), "2 sigma(d)");
    add("PhiV[S+dF,1,(1)](pt;C_pt)", FamilySupport::PositiveOnly, d_sigma_times(1),
        "d sigma(d)");
    add("Phi[S+dF,1](pt,g1,g2)", FamilySupport::PositiveOnly, d_sigma_times(1), "d sigma(d)");
    add("PhiV[S+dF,1,(1)](pt,g1;C_g2)", FamilySupport::PositiveOnly, d_sigma_times(1),
        "d sigma(d)");
    add("Phi[S+dF,1](pt^2)", FamilySupport::PositiveOnly, d_sigma_times(2), "2 d sigma(d)");
    add("PhiV[S+dF,1,(1)](pt^2;C_F)", FamilySupport::PositiveOnly, d_sigma_times(2),
        "2 d sigma(d)");
    add("Phi[S+dF,1](psiF,1,pt^2)", FamilySupport::PositiveOnly, d_sigma_times(2),
        "2 d sigma(d)");
    add("Phi[S+dF,1](F,pt^2)", FamilySupport::PositiveOnly, d_sigma_times(2),
        "2 d sigma(d), divisor pairing against F");
    add("Phi[S+dF,1](psiF^2,S)", FamilySupport::PositiveOnly, sigma_times(4), "4 sigma(d)");
    add("Phi[S+dF,1](psiF^2,1,pt)", FamilySupport::PositiveOnly, sigma_times(4), "4 sigma(d)");
    add("Phi[2S+dF,1](psiF^3,pt)", FamilySupport::PositiveOnly, sigma_times(12), "12 sigma(d)");
    add("Phi[2S+dF,1](psiF,tauF,pt^2)", FamilySupport::PositiveOnly, d_sigma_times(14),
        "14 d sigma(d)");
    add("Phi[2S+dF,1](tauF^3,pt)", FamilySupport::PositiveOnly, sigma_times(24), "24 sigma(d)");
    add("Phi[2S+dF,1](tauF^2,pt^2)", FamilySupport::PositiveOnly, d_sigma_times(16),
        "16 d sigma(d)");
    add("Phi[S+dF,1](S,tauF,pt)", FamilySupport::PositiveOnly, d_sigma_times(4),
        "4 d sigma(d), divisor pairing against S: d * 2 sigma(d) + 2 d sigma(d)");
    add("PhiV[S+dF,2,(1)](C_pt;tauF^2)", FamilySupport::PositiveOnly,
        [t](int d) { return Rational(4) * sigma_pair_convolution(*t, d, SigmaSupport::PositiveOnly); },
        "sum_{d1+d2=d} 4 sigma(d1) sigma(d2)");
    add("PhiV[2S+dF,1,(1,1)](C_pt^2;tauF^2)", FamilySupport::PositiveOnly, d_sigma_times(12),
        "12 d sigma(d)");
    add("PhiV[2S+dF,1,(2)](C_pt;tauF^2)", FamilySupport::PositiveOnly, sigma_times(10),
        "10 sigma(d)");

    // --- Closed forms of the disconnected counts, the targets the checks
    // re-derive.
    add("GPhi[2S+dF,4,(1,1)](C_pt^2)", FamilySupport::ZeroOnly, constant(1), "delta_{d0}");
    add("GPhi[2S+dF,4,(1,1)](C_pt.F;g1,g2)", FamilySupport::ZeroOnly, constant(1), "delta_{d0}");
    add("GPhi[2S+dF,4,(1,1)](C_-g1.g2;g1,g2)", FamilySupport::ZeroOnly, constant(-1),
        "-delta_{d0}");
    add("GPhi[2S+dF,2,(2)](C_pt;g1,g2)", FamilySupport::NonNegative, zero, "0");
    add("GPhi[2S+dF,2,(1,1)](C_pt^2;g1,g2)", FamilySupport::NonNegative, zero, "0");
    add("GPhi[2S+dF,4,(1,1)](C_pt.F;pt)", FamilySupport::ZeroOnly, constant(1), "delta_{d0}");
    add("GPhi[2S+dF,2,(2)](C_pt;pt)", FamilySupport::NonNegative, zero, "0");
    add("GPhi[2S+dF,2,(1,1)](C_pt^2;pt)", FamilySupport::PositiveOnly, d_sigma_times(2),
        "2 d sigma(d)");
    add("GPhi[2S+dF,4,(1,1)](C_pt.F;tauF)", FamilySupport::NonNegative, zero, "0");
    add("GPhi[2S+dF,2,(2)](C_pt;tauF)", FamilySupport::ZeroOnly, constant(1, 2),
        "(1/2) delta_{d0}");
    add("GPhi[2S+dF,2,(1,1)](C_pt^2;tauF)", FamilySupport::PositiveOnly, sigma_times(4),
        "4 sigma(d)");
    add("GPhi[2S+dF,4,(1,1)](C_F^2;tauF^2)", FamilySupport::NonNegative, zero, "0");
    add("GPhi[2S+dF,2,(2)](C_F;tauF^2)", FamilySupport::NonNegative, zero, "0");
    add("GPhi[2S+dF,2,(1,1)](C_pt.F;tauF^2)", FamilySupport::ZeroOnly, constant(1),
        "delta_{d0}");
    add("GPhi[2S+dF,2,(1,1)](C_-g1.g2;tauF^2)", FamilySupport::ZeroOnly, constant(1),
        "delta_{d0}");
    add("GPhi[2S+dF,0,(2)](C_pt;tauF^2)", FamilySupport::PositiveOnly, sigma_times(10),
        "10 sigma(d)");
    add("GPhi[2S+dF,0,(1,1)](C_pt^2;tauF^2)", FamilySupport::PositiveOnly,
        [t](int d) {
            return Rational(16) * sigma_pair_convolution(*t, d, SigmaSupport::PositiveOnly) +
                   Rational(12) * Rational(d) * Rational(t->sigma(d));
        },
        "sum 16 sigma(d1) sigma(d2) + 12 d sigma(d)");
}

const SequenceFamily& FamilyCatalog::family(const std::string& id) const {
    auto it = families_.find(id);
    if (it == families_.end()) throw UnknownFamily("unregistered invariant family: " + id);
    return it->second;
}

bool FamilyCatalog::has_family(const std::string& id) const { return families_.count(id) > 0; }

std::vector<std::string> FamilyCatalog::family_ids() const {
    std::vector<std::string> ids;
    ids.reserve(families_.size());
    for (const auto& [id, fam] : families_) ids.push_back(id);
    return ids;
}

Rational FamilyCatalog::convolve(const ConvolutionTerm& term, int d) const {
    if (d < 0) throw std::invalid_argument("FamilyCatalog::convolve: negative index");
    const SequenceFamily& left = family(term.left);
    const SequenceFamily& right = family(term.right);
    Rational acc;
    for (int d1 = 0; d1 <= d; ++d1) {
        const Rational l = left.at(d1);
        if (l.is_zero()) continue;
        acc += l * right.at(d - d1);
    }
    return term.weight * acc;
}

Rational FamilyCatalog::convolve(const std::vector<ConvolutionTerm>& terms, int d) const {
    Rational acc;
    for (const auto& term : terms) acc += convolve(term, d);
    return acc;
}

Rational sigma_pair_convolution(const DivisorSumTable& table, int d, SigmaSupport support) {
    const auto sigma_q = [&](int k) -> Rational {
        if (k == 0)
            return support == SigmaSupport::WithG2Constant ? Rational(-1, 24) : Rational(0);
        return Rational(table.sigma(k));
    };
    Rational acc;
    for (int d1 = 0; d1 <= d; ++d1) acc += sigma_q(d1) * sigma_q(d - d1);
    return acc;
}

namespace {

// One disconnected-count closed form re-derived as the pair part (the
// registered convolution terms) plus the connected part (a registered
// family, absent when the Euler characteristic leaves no connected genus).
struct GPhiItem {
    std::string closed_form; // registered target family; also names the check
    std::vector<ConvolutionTerm> pair_terms;
    std::string connected; // empty = none
};

IdentityReport check_values(const std::string& name, int d_max,
                            const std::function<Rational(int)>& lhs,
                            const std::function<Rational(int)>& rhs) {
    std::vector<Rational> residual(static_cast<std::size_t>(d_max) + 1);
    for (int d = 0; d <= d_max; ++d) residual[static_cast<std::size_t>(d)] = lhs(d) - rhs(d);
    return IdentityReport::from_residual(name, PowerSeries(std::move(residual)));
}

IdentityReport check_item(const FamilyCatalog& catalog, const GPhiItem& item, int d_max) {
    const auto route = [&](int d) {
        Rational value = catalog.convolve(item.pair_terms, d);
        if (!item.connected.empty()) value += catalog.family(item.connected).at(d);
        return value;
    };
    const auto closed = [&](int d) { return catalog.family(item.closed_form).at(d); };
    return check_values(item.closed_form, d_max, route, closed);
}

std::vector<GPhiItem> point_and_loop_items() {
    return {
        {"GPhi[2S+dF,4,(1,1)](C_pt^2)",
         {{"PhiV[S,0,(1)](C_pt)", "PhiV[S,0,(1)](C_pt)", Rational(1)}},
         ""},
        {"GPhi[2S+dF,4,(1,1)](C_pt.F;g1,g2)",
         {{"PhiV[S,0,(1)](C_pt)", "PhiV[S,0,(1)](g1,g2;C_F)", Rational(1)}},
         ""},
        // the dual-basis pairing of the two loop classes is orientation
        // reversing, hence the -1
        {"GPhi[2S+dF,4,(1,1)](C_-g1.g2;g1,g2)",
         {{"PhiV[S,0,(1)](g1;C_g2)", "PhiV[S,0,(1)](g1;C_g2)", Rational(-1)}},
         ""},
        {"GPhi[2S+dF,2,(2)](C_pt;g1,g2)", {}, "PhiV[2S,0,(2)](C_pt;g1,g2)"},
        {"GPhi[2S+dF,2,(1,1)](C_pt^2;g1,g2)",
         {{"PhiV[S+dF,1,(1)](g1,g2;C_pt)", "PhiV[S,0,(1)](C_pt)", Rational(2)}},
         "PhiV[2S,0,(1,1)](C_pt^2;g1,g2)"},
        {"GPhi[2S+dF,4,(1,1)](C_pt.F;pt)",
         {{"PhiV[S,0,(1)](C_pt)", "PhiV[S,0,(1)](pt;C_F)", Rational(1)}},
         ""},
        {"GPhi[2S+dF,2,(2)](C_pt;pt)", {}, "PhiV[2S,0,(2)](C_pt;pt)"},
        {"GPhi[2S+dF,2,(1,1)](C_pt^2;pt)",
         {{"PhiV[S+dF,1,(1)](pt;C_pt)", "PhiV[S,0,(1)](C_pt)", Rational(2)}},
         "PhiV[2S,0,(1,1)](C_pt^2;pt)"},
    };
}

std::vector<GPhiItem> tau_f_items() {
    return {
        {"GPhi[2S+dF,4,(1,1)](C_pt.F;tauF)",
         {{"PhiV[S,0,(1)](C_pt)", "PhiV[S,0,(1)](tauF;C_F)", Rational(1)}},
         ""},
        {"GPhi[2S+dF,2,(2)](C_pt;tauF)", {}, "PhiV[2S,0,(2)](tauF;C_pt)"},
        {"GPhi[2S+dF,2,(1,1)](C_pt^2;tauF)",
         {{"PhiV[S+dF,1,(1)](tauF;C_pt)", "PhiV[S,0,(1)](C_pt)", Rational(2)}},
         "PhiV[2S,0,(1,1)](C_pt^2;tauF)"},
    };
}

std::vector<GPhiItem> tau_squared_plain_items() {
    return {
        {"GPhi[2S+dF,4,(1,1)](C_F^2;tauF^2)",
         {{"PhiV[S,0,(1)](tauF;C_F)", "PhiV[S,0,(1)](tauF;C_F)", Rational(2)}},
         ""},
        {"GPhi[2S+dF,2,(2)](C_F;tauF^2)", {}, "PhiV[2S,0,(2)](tauF^2;C_F)"},
        {"GPhi[2S+dF,2,(1,1)](C_pt.F;tauF^2)",
         {{"PhiV[S+dF,1,(1)](C_F;tauF^2)", "PhiV[S,0,(1)](C_pt)", Rational(1)},
          {"PhiV[S,0,(1)](tauF;C_F)", "PhiV[S+dF,1,(1)](tauF;C_pt)", Rational(2)}},
         "PhiV[2S,0,(1,1)](C_pt.F;tauF^2)"},
        // the pair part vanishes by dimension count: no splitting of the
        // loop contacts against even constraints survives
        {"GPhi[2S+dF,2,(1,1)](C_-g1.g2;tauF^2)", {}, "PhiV[2S,0,(1,1)](C_-g1.g2;tauF^2)"},
    };
}

// One-contact tau^2 balance: 24 sigma(d) equals twice the connected
// double-contact count plus the pair part with one point and one descendant
// split off. Solving gives the 10 sigma(d) closed form.
IdentityReport tau_squared_balance_one_contact(const FamilyCatalog& catalog, int d_max) {
    const std::vector<ConvolutionTerm> pair_terms = {
        {"PhiV[S,0,(1)](C_pt)", "PhiV[S+dF,1,(1)](tauF,pt;C_F)", Rational(1)},
        {"PhiV[S+dF,1,(1)](tauF;C_pt)", "PhiV[S,0,(1)](pt;C_F)", Rational(1)},
        {"PhiV[S+dF,1,(1)](pt;C_pt)", "PhiV[S,0,(1)](tauF;C_F)", Rational(1)},
    };
    const auto solved = [&](int d) {
        const Rational total = catalog.family("Phi[2S+dF,1](tauF^3,pt)").at(d);
        return (total - catalog.convolve(pair_terms, d)) / Rational(2);
    };
    const auto closed = [&](int d) {
        return catalog.family("GPhi[2S+dF,0,(2)](C_pt;tauF^2)").at(d);
    };
    return check_values("GPhi[2S+dF,0,(2)](C_pt;tauF^2) via one-contact balance", d_max, solved,
                        closed);
}

std::vector<ConvolutionTerm> pair_part_two_points() {
    // the tau^2 pair part with two point constraints, split as
    // (genus 2 | genus 0) and (genus 1 | genus 1)
    return {
        {"PhiV[S+dF,2,(1)](C_pt;tauF^2)", "PhiV[S,0,(1)](C_pt)", Rational(2)},
        {"PhiV[S+dF,1,(1)](tauF;C_pt)", "PhiV[S+dF,1,(1)](tauF;C_pt)", Rational(2)},
    };
}

// Two-point tau^2 balance: 16 d sigma(d) equals the pair count with the
// points on one side (4 d sigma(d)) plus half the F^2-contact pair count
// (which is 2 delta_{d0}) times the connected invariant. Solving pins the
// connected part at 12 d sigma(d).
IdentityReport tau_squared_balance_two_points(const FamilyCatalog& catalog, int d_max) {
    const std::vector<ConvolutionTerm> points_aside = {
        {"PhiV[S,0,(1)](C_pt)", "PhiV[S+dF,1,(1)](pt^2;C_F)", Rational(1)},
        {"PhiV[S+dF,1,(1)](pt;C_pt)", "PhiV[S,0,(1)](pt;C_F)", Rational(2)},
    };
    const ConvolutionTerm f2_contact{"PhiV[S,0,(1)](pt;C_F)", "PhiV[S,0,(1)](pt;C_F)",
                                     Rational(2)};
    const auto solved = [&](int d) {
        const Rational total = catalog.family("Phi[2S+dF,1](tauF^2,pt^2)").at(d);
        Rational lhs = total;
        // subtract sum_{d1+d2=d} points_aside(d1) * delta-contact(d2); the
        // delta factor is the double-contact count 1 at d2 = 0
        lhs -= catalog.convolve(points_aside, d) *
               catalog.family("PhiV[2S,0,(1,1)](C_pt.F;tauF^2)").at(0);
        // remaining term is (1/2) * f2_contact(0) * x(d) = x(d)
        const Rational factor = Rational(1, 2) * catalog.convolve(f2_contact, 0);
        return lhs / factor;
    };
    const auto closed = [&](int d) {
        return catalog.family("PhiV[2S+dF,1,(1,1)](C_pt^2;tauF^2)").at(d);
    };
    return check_values("PhiV[2S+dF,1,(1,1)](C_pt^2;tauF^2) via two-point balance", d_max,
                        solved, closed);
}

std::function<Rational(int)> tau_squared_pair_route(const FamilyCatalog& catalog) {
    return [&catalog, terms = pair_part_two_points()](int d) {
        return catalog.convolve(terms, d) +
               catalog.family("PhiV[2S+dF,1,(1,1)](C_pt^2;tauF^2)").at(d);
    };
}

} // namespace

std::vector<IdentityReport> gphi_closed_form_checks(const FamilyCatalog& catalog, GPhiGroup group,
                                                    int d_max) {
    if (d_max < 0 || d_max > catalog.d_max())
        throw std::invalid_argument("gphi_closed_form_checks: d_max outside catalog range");

    std::vector<GPhiItem> items;
    std::vector<IdentityReport> reports;
    switch (group) {
        case GPhiGroup::PointAndLoop: items = point_and_loop_items(); break;
        case GPhiGroup::TauF: items = tau_f_items(); break;
        case GPhiGroup::TauSquared: items = tau_squared_plain_items(); break;
    }
    for (const auto& item : items) reports.push_back(check_item(catalog, item, d_max));

    if (group == GPhiGroup::TauSquared) {
        reports.push_back(tau_squared_balance_one_contact(catalog, d_max));
        reports.push_back(tau_squared_balance_two_points(catalog, d_max));
        const auto route = tau_squared_pair_route(catalog);
        const auto closed = [&](int d) {
            return catalog.family("GPhi[2S+dF,0,(1,1)](C_pt^2;tauF^2)").at(d);
        };
        reports.push_back(check_values(
            "GPhi[2S+dF,0,(1,1)](C_pt^2;tauF^2) [sigma support d>=1]", d_max, route, closed));
    }
    return reports;
}

SigmaConventionResolution resolve_pair_count_convention(const FamilyCatalog& catalog, int d_max) {
    if (d_max < 0 || d_max > catalog.d_max())
        throw std::invalid_argument("resolve_pair_count_convention: d_max outside catalog range");
    const auto route = tau_squared_pair_route(catalog);
    const auto closed_with = [&](SigmaSupport support) {
        return [&catalog, support](int d) {
            return Rational(16) * sigma_pair_convolution(catalog.table(), d, support) +
                   Rational(12) * Rational(d) *
                       Rational(d >= 1 ? catalog.table().sigma(d) : 0);
        };
    };
    SigmaConventionResolution resolution{
        check_values("pair-count closed form, sigma over d >= 1", d_max, route,
                     closed_with(SigmaSupport::PositiveOnly)),
        check_values("pair-count closed form, sigma(0) = -1/24 included", d_max, route,
                     closed_with(SigmaSupport::WithG2Constant)),
    };
    return resolution;
}

std::vector<IdentityReport> additive_chain_checks(const FamilyCatalog& catalog, int d_max) {
    if (d_max < 0 || d_max > catalog.d_max())
        throw std::invalid_argument("additive_chain_checks: d_max outside catalog range");

    struct Chain {
        std::string name;
        std::string target;
        std::vector<std::pair<Rational, std::string>> parts;
    };
    const std::vector<Chain> chains = {
        {"4 sigma(d) = 2 sigma(d) + 2 sigma(d)",
         "Phi[S+dF,1](psiF^2,S)",
         {{Rational(1), "Phi[S+dF,1](psiF,pt)"}, {Rational(1), "Phi[dF,1](S)"}}},
        {"12 sigma(d) = 4 sigma(d) + 4 sigma(d) + 4 sigma(d)",
         "Phi[2S+dF,1](psiF^3,pt)",
         {{Rational(1), "Phi[S+dF,1](psiF^2,S)"},
          {Rational(2), "Phi[S+dF,1](psiF,pt)"},
          {Rational(2), "Phi[dF,1](S)"}}},
        {"24 sigma(d) = 12 sigma(d) + 3 * 4 sigma(d)",
         "Phi[2S+dF,1](tauF^3,pt)",
         {{Rational(1), "Phi[2S+dF,1](psiF^3,pt)"}, {Rational(3), "Phi[S+dF,1](psiF^2,1,pt)"}}},
        {"16 d sigma(d) = 14 d sigma(d) + 2 d sigma(d)",
         "Phi[2S+dF,1](tauF^2,pt^2)",
         {{Rational(1), "Phi[2S+dF,1](psiF,tauF,pt^2)"},
          {Rational(1), "Phi[S+dF,1](psiF,1,pt^2)"}}},
        {"14 d sigma(d) = 8 d sigma(d) + 2 d sigma(d) + 4 d sigma(d)",
         "Phi[2S+dF,1](psiF,tauF,pt^2)",
         {{Rational(2), "Phi[S+dF,1](S,tauF,pt)"},
          {Rational(1), "Phi[S+dF,1](F,pt^2)"},
          {Rational(2), "Phi[S+dF,1](pt^2)"}}},
    };

    std::vector<IdentityReport> reports;
    reports.reserve(chains.size());
    for (const auto& chain : chains) {
        const auto lhs = [&](int d) { return catalog.family(chain.target).at(d); };
        const auto rhs = [&](int d) {
            Rational acc;
            for (const auto& [weight, id] : chain.parts) acc += weight * catalog.family(id).at(d);
            return acc;
        };
        reports.push_back(check_values(chain.name, d_max, lhs, rhs));
    }
    return reports;
}

} // namespace yzq
