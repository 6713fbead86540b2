#include "commands.hpp"

#include "reports.hpp"
#include "series_file.hpp"

#include "yzq/pipeline.hpp"
#include "yzq/series_registry.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

namespace yzq::cli {

namespace {

using nlohmann::json;

void print_series(const std::string& name, const PowerSeries& series,
                  const std::string& format) {
    if (format == "json") {
        std::cout << serialize_series_file(to_series_file(name, series));
        return;
    }
    for (int k = 0; k <= series.order(); ++k) {
        if (format == "csv")
            std::cout << k << ',' << series[k].str() << '\n';
        else
            std::cout << series[k].str() << '\n';
    }
}

} // namespace

int cmd_series(const std::string& id, const CliConfig& config) {
    const auto series_id = parse_series_id(id);
    if (!series_id) {
        std::cerr << "unknown series id '" << id << "'\n";
        return kExitUsage;
    }
    PowerSeries series = [&] {
        if (config.cache_dir) {
            if (auto cached = load_cached_series(*config.cache_dir, id, config.order))
                return std::move(*cached);
        }
        return build_series(*series_id, config.order);
    }();
    print_series(id, series, config.format);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const CliConfig& config) {
    const SuiteRun run = run_verify_suite(suite, config.order);
    if (config.format == "json")
        std::cout << suite_to_json(run).dump() << '\n';
    else
        print_suite_text(std::cout, run);
    return run.passed ? kExitOk : kExitFailure;
}

int cmd_table(const std::string& kind, int k_max, const CliConfig& config) {
    if (kind == "yz-index1") {
        const PowerSeries n0 = n0_series(k_max);
        if (config.format == "json") {
            json rows = json::array();
            for (int d = 0; d <= k_max; ++d)
                rows.push_back({{"d", d}, {"count", n0[d].str()}});
            std::cout << json{{"kind", kind}, {"rows", rows}}.dump() << '\n';
        } else {
            for (int d = 0; d <= k_max; ++d) std::cout << d << ',' << n0[d].str() << '\n';
        }
        return kExitOk;
    }

    // yz-index2: classes of square 2d - 2 with d = 4k - 3, counted through
    // the ODE route and compared against the product formula.
    const auto table = yau_zaslow_index2_table(k_max);
    bool all_match = true;
    if (config.format == "json") {
        json rows = json::array();
        for (const auto& entry : table) {
            rows.push_back({{"d", entry.d},
                            {"count", entry.count.str()},
                            {"expected", entry.expected.str()},
                            {"matches", entry.matches}});
            all_match = all_match && entry.matches;
        }
        std::cout << json{{"kind", kind}, {"rows", rows}}.dump() << '\n';
    } else {
        for (const auto& entry : table) {
            std::cout << entry.d << ',' << entry.count.str() << ','
                      << (entry.matches ? "match" : "MISMATCH") << '\n';
            all_match = all_match && entry.matches;
        }
    }
    return all_match ? kExitOk : kExitFailure;
}

int cmd_cache(const std::string& action, const CliConfig& config) {
    if (!config.cache_dir) {
        std::cerr << "cache: --dir is required\n";
        return kExitUsage;
    }
    const std::filesystem::path dir = *config.cache_dir;

    if (action == "write") {
        for (const SeriesInfo& info : registered_series()) {
            const PowerSeries series = build_series(info.id, config.order);
            write_series_file_atomic(dir, to_series_file(std::string(info.name), series));
        }
        std::cout << "wrote " << registered_series().size() << " series files to " << dir.string()
                  << " at order " << config.order << '\n';
        return kExitOk;
    }

    if (action == "read") {
        int loaded = 0;
        for (const SeriesInfo& info : registered_series()) {
            const auto path = series_file_path(dir, std::string(info.name));
            std::ifstream in(path, std::ios::binary);
            if (!in) continue;
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            const SeriesFile file = parse_series_file(text); // throws on any violation
            if (file.series_id != info.name)
                throw std::runtime_error("series file " + path.string() + " declares id '" +
                                         file.series_id + "'");
            to_power_series(file); // re-checks every coefficient parses
            ++loaded;
        }
        std::cout << "read " << loaded << " series files from " << dir.string() << '\n';
        return kExitOk;
    }

    // clear
    int removed = 0;
    for (const SeriesInfo& info : registered_series()) {
        const auto path = series_file_path(dir, std::string(info.name));
        removed += std::filesystem::remove(path) ? 1 : 0;
        std::filesystem::remove(path.string() + ".tmp");
    }
    std::cout << "removed " << removed << " series files from " << dir.string() << '\n';
    return kExitOk;
}

} // namespace yzq::cli
