#include "commands.hpp"
#include "reports.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

// Default order comes from YZQ_ORDER when set; explicit flags win.
int default_order() {
    if (const char* env = std::getenv("YZQ_ORDER")) {
        try {
            const int value = std::stoi(env);
            if (value >= 0) return value;
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring invalid YZQ_ORDER='" << env << "'\n";
    }
    return 128;
}

} // namespace

int main(int argc, char** argv) {
    using namespace yzq::cli;

    CLI::App app{"exact q-series engine for the Yau-Zaslow curve counts of index two"};
    app.require_subcommand(1);

    CliConfig config;
    config.order = default_order();

    std::string series_id;
    auto* series = app.add_subcommand("series", "print the coefficients of a named series");
    series->add_option("id", series_id, "series id (e.g. N0, G2, Q)")->required();
    series->add_option("--order", config.order, "truncation order")
        ->check(CLI::NonNegativeNumber);
    series->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    series->add_option("--cache-dir", config.cache_dir, "consult a series cache first");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run an identity verification suite");
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(verify_suite_names()));
    verify->add_option("--order", config.order, "order / maximal degree checked")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string kind;
    int k_max = 1;
    auto* table = app.add_subcommand("table", "print a curve count table");
    table->add_option("kind", kind, "table kind")
        ->required()
        ->check(CLI::IsMember({"yz-index1", "yz-index2"}));
    table->add_option("--kmax", k_max, "number of rows")->required()->check(CLI::PositiveNumber);
    table->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string action;
    auto* cache = app.add_subcommand("cache", "write, read back, or clear the series cache");
    cache->add_option("action", action, "cache action")
        ->required()
        ->check(CLI::IsMember({"write", "read", "clear"}));
    cache->add_option("--dir", config.cache_dir, "cache directory")->required();
    cache->add_option("--order", config.order, "truncation order for write")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (series->parsed()) return cmd_series(series_id, config);
        if (verify->parsed()) return cmd_verify(suite, config);
        if (table->parsed()) return cmd_table(kind, k_max, config);
        return cmd_cache(action, config);
    } catch (const std::invalid_argument& e) {
        // precondition violations surface as usage errors (e.g. an order too
        // small for the requested identity)
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
