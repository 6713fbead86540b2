#include "series_file.hpp"

#include "yzq/pipeline.hpp"
#include "yzq/series_registry.hpp"

#include "../support/random_series.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unistd.h>

using namespace yzq;
using namespace yzq::cli;

namespace {

std::filesystem::path fresh_dir(const char* tag) {
    auto dir = std::filesystem::temp_directory_path() /
               (std::string("yzq_test_") + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("series file round trip is exact") {
    test::RandomSeries rng(0x5eed500a);
    for (int i = 0; i < 100; ++i) {
        const PowerSeries series = rng.series(0, 24);
        const SeriesFile file = to_series_file("G2", series);
        const SeriesFile reparsed = parse_series_file(serialize_series_file(file));
        CHECK(reparsed.series_id == file.series_id);
        CHECK(reparsed.order == file.order);
        CHECK(reparsed.coefficients == file.coefficients);
        CHECK(to_power_series(reparsed) == series);
        CHECK(to_power_series(reparsed).order() == series.order());
    }
}

TEST_CASE("serialization is deterministic and newline-terminated") {
    const SeriesFile file = to_series_file("N0", n0_series(8));
    const std::string once = serialize_series_file(file);
    const std::string twice = serialize_series_file(file);
    CHECK(once == twice);
    CHECK(once.back() == '\n');
    CHECK(once.find('.') == std::string::npos); // never floating point
}

TEST_CASE("schema version mismatch is rejected") {
    SeriesFile file = to_series_file("N0", n0_series(4));
    file.schema_version = 2;
    CHECK_THROWS_WITH_AS(parse_series_file(serialize_series_file(file)),
                         doctest::Contains("schema mismatch"), std::runtime_error);
}

TEST_CASE("corrupted rational strings are rejected") {
    const char* base =
        R"({"coefficients":[%s],"order":0,"schema_version":1,"series_id":"N0"})";
    char buffer[256];

    std::snprintf(buffer, sizeof buffer, base, "\"2/4\""); // not lowest terms
    CHECK_THROWS_AS(parse_series_file(buffer), std::runtime_error);
    std::snprintf(buffer, sizeof buffer, base, "\"1.5\"");
    CHECK_THROWS_AS(parse_series_file(buffer), std::runtime_error);
    std::snprintf(buffer, sizeof buffer, base, "\"abc\"");
    CHECK_THROWS_AS(parse_series_file(buffer), std::runtime_error);
    std::snprintf(buffer, sizeof buffer, base, "\"5/1\""); // canonical form is "5"
    CHECK_THROWS_AS(parse_series_file(buffer), std::runtime_error);
}

TEST_CASE("order and coefficient count must agree") {
    CHECK_THROWS_AS(
        parse_series_file(
            R"({"coefficients":["1","2"],"order":3,"schema_version":1,"series_id":"N0"})"),
        std::runtime_error);
    CHECK_THROWS_AS(parse_series_file(R"({"schema_version":1})"), std::runtime_error);
    CHECK_THROWS_AS(parse_series_file("not json"), std::runtime_error);
}

TEST_CASE("cache files: atomic write, order dominance") {
    const auto dir = fresh_dir("cache");
    const PowerSeries n0 = n0_series(16);
    write_series_file_atomic(dir, to_series_file("N0", n0));
    CHECK(std::filesystem::exists(series_file_path(dir, "N0")));
    CHECK(!std::filesystem::exists(series_file_path(dir, "N0").string() + ".tmp"));

    SUBCASE("a higher-order file serves lower-order requests by truncation") {
        const auto hit = load_cached_series(dir, "N0", 8);
        REQUIRE(hit.has_value());
        CHECK(hit->order() == 8);
        CHECK(*hit == n0.truncated(8));
    }
    SUBCASE("a lower-order file is a miss") {
        CHECK(!load_cached_series(dir, "N0", 32).has_value());
    }
    SUBCASE("absent file is a miss") {
        CHECK(!load_cached_series(dir, "G2", 8).has_value());
    }
    SUBCASE("an id/filename mismatch is an error") {
        std::ofstream out(series_file_path(dir, "P0"), std::ios::binary);
        out << serialize_series_file(to_series_file("N0", n0));
        out.close();
        CHECK_THROWS_AS(load_cached_series(dir, "P0", 8), std::runtime_error);
    }
    std::filesystem::remove_all(dir);
}
