#include "reports.hpp"

#include "yzq/e0_invariants.hpp"
#include "yzq/eisenstein.hpp"
#include "yzq/pipeline.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace yzq::cli {

namespace {

IdentityReport basis_fit_report(int order) {
    const PowerSeries e = weight4_level2_e_series(order);
    const FormFitResult fit = fit_weight4_level2(e);
    // a = b = 0 with zero residual is equivalent to E vanishing identically:
    // the reconstruction a*G4 + b*G2_4 + residual is E itself.
    IdentityReport report =
        IdentityReport::from_residual("weight4-level2-fit: E = a G4 + b G2_4 has a = b = 0", e);
    report.passed = report.passed && fit.a.is_zero() && fit.b.is_zero() && fit.is_zero_to_order;
    return report;
}

std::vector<IdentityReport> qmod_suite(int order) {
    return {quasimodular_relation_check(order), basis_fit_report(order)};
}

std::vector<IdentityReport> n0_ode_suite(int order) {
    return {primitive_ode_check(order)};
}

std::vector<IdentityReport> ode3_suite(int order) {
    const PowerSeries q =
        Rational(1, 8) * n0_series((order + 1) / 2).compose_power(2).truncated(order);
    IdentityReport report = ode3_check(q);
    report.identity_name = "odd-part-ode at Q = (1/8) N0(t^2)";
    return {report};
}

std::vector<IdentityReport> prop_suite(int order) {
    return {ode_vs_product_check(order)};
}

std::vector<IdentityReport> chain_suite(int order) {
    const FamilyCatalog catalog(order);
    return additive_chain_checks(catalog, order);
}

std::vector<IdentityReport> gphi_suite(int order) {
    const FamilyCatalog catalog(order);
    std::vector<IdentityReport> reports;
    for (GPhiGroup group : {GPhiGroup::PointAndLoop, GPhiGroup::TauF, GPhiGroup::TauSquared}) {
        auto group_reports = gphi_closed_form_checks(catalog, group, order);
        reports.insert(reports.end(), std::make_move_iterator(group_reports.begin()),
                       std::make_move_iterator(group_reports.end()));
    }
    // The sigma-support disambiguation must be decisive: the d >= 1
    // convention matches the assembled route and the sigma(0) = -1/24
    // convention must not.
    const SigmaConventionResolution resolution = resolve_pair_count_convention(catalog, order);
    PowerSeries marker = resolution.with_constant.passed ? PowerSeries::one(order)
                                                         : PowerSeries(order);
    reports.push_back(IdentityReport::from_residual(
        "sigma-support resolution decisive (d >= 1 matches, sigma(0) = -1/24 does not)",
        resolution.positive_only.residual + marker));
    return reports;
}

} // namespace

SuiteRun run_verify_suite(const std::string& suite, int order) {
    SuiteRun run;
    run.suite = suite;
    run.order = order;
    if (suite == "qmod") {
        run.identities = qmod_suite(order);
    } else if (suite == "n0-ode") {
        run.identities = n0_ode_suite(order);
    } else if (suite == "ode3") {
        run.identities = ode3_suite(order);
    } else if (suite == "prop31") {
        run.identities = prop_suite(order);
    } else if (suite == "lemma5-6") {
        run.identities = chain_suite(order);
    } else if (suite == "lemma7") {
        run.identities = gphi_suite(order);
    } else if (suite == "all") {
        for (const char* name : {"qmod", "n0-ode", "ode3", "prop31", "lemma5-6", "lemma7"}) {
            auto sub = run_verify_suite(name, order);
            run.identities.insert(run.identities.end(),
                                  std::make_move_iterator(sub.identities.begin()),
                                  std::make_move_iterator(sub.identities.end()));
        }
    } else {
        throw std::invalid_argument("unknown verify suite: " + suite);
    }
    run.passed = std::all_of(run.identities.begin(), run.identities.end(),
                             [](const IdentityReport& r) { return r.passed; });
    return run;
}

nlohmann::json suite_to_json(const SuiteRun& run) {
    nlohmann::json identities = nlohmann::json::array();
    for (const IdentityReport& report : run.identities) {
        nlohmann::json item;
        item["name"] = report.identity_name;
        item["order_checked"] = report.order_checked;
        item["passed"] = report.passed;
        item["first_failure_degree"] =
            report.first_failure_degree ? nlohmann::json(*report.first_failure_degree)
                                        : nlohmann::json(nullptr);
        identities.push_back(std::move(item));
    }
    nlohmann::json j;
    j["schema_version"] = kVerifyReportSchemaVersion;
    j["suite"] = run.suite;
    j["order"] = run.order;
    j["passed"] = run.passed;
    j["identities"] = std::move(identities);
    return j;
}

void print_suite_text(std::ostream& out, const SuiteRun& run) {
    for (const IdentityReport& report : run.identities) {
        if (report.passed) {
            out << "PASS  " << report.identity_name << "  (order " << report.order_checked
                << ")\n";
        } else {
            out << "FAIL  " << report.identity_name << "  (order " << report.order_checked
                << ", first failure at degree ";
            if (report.first_failure_degree)
                out << *report.first_failure_degree;
            else
                out << "?";
            out << ")\n";
        }
    }
    out << (run.passed ? "OK" : "FAILED") << ": suite " << run.suite << ", "
        << run.identities.size() << " identities at order " << run.order << "\n";
}

} // namespace yzq::cli
