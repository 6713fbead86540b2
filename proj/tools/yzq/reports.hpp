#pragma once

#include "yzq/identity_report.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace yzq::cli {

inline constexpr int kVerifyReportSchemaVersion = 1;

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"qmod",     "n0-ode", "ode3", "prop31",
                                                   "lemma5-6", "lemma7", "all"};
    return names;
}

struct SuiteRun {
    std::string suite;
    int order = 0;
    bool passed = false;
    std::vector<IdentityReport> identities;
};

/// Runs every identity of the named suite at the given order. The lemma
/// suites interpret the order as the maximal degree d checked.
SuiteRun run_verify_suite(const std::string& suite, int order);

nlohmann::json suite_to_json(const SuiteRun& run);

void print_suite_text(std::ostream& out, const SuiteRun& run);

} // namespace yzq::cli
