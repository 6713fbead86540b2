#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace yzq::cli {

// Exit code contract shared by every subcommand: 0 success, 1 verification
// or internal failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
    int order = 128;
    std::string format = "text"; // text | json | csv
    std::optional<std::filesystem::path> cache_dir;
};

int cmd_series(const std::string& id, const CliConfig& config);
int cmd_verify(const std::string& suite, const CliConfig& config);
int cmd_table(const std::string& kind, int k_max, const CliConfig& config);
int cmd_cache(const std::string& action, const CliConfig& config);

} // namespace yzq::cli
