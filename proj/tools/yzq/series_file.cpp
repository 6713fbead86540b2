#include "series_file.hpp"

#include "yzq/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace yzq::cli {

namespace {

using nlohmann::json;

std::string canonical_or_throw(const std::string& text) {
    if (text.find_first_of(".eE") != std::string::npos)
        throw std::runtime_error("corrupted rational string (floating point?): '" + text + "'");
    Rational value;
    try {
        value = Rational::from_string(text);
    } catch (const std::exception&) {
        throw std::runtime_error("corrupted rational string: '" + text + "'");
    }
    if (value.str() != text)
        throw std::runtime_error("rational string not in canonical lowest terms: '" + text + "'");
    return text;
}

} // namespace

SeriesFile to_series_file(const std::string& series_id, const PowerSeries& series) {
    SeriesFile file;
    file.series_id = series_id;
    file.order = series.order();
    file.coefficients.reserve(series.coefficients().size());
    for (const Rational& c : series.coefficients()) file.coefficients.push_back(c.str());
    return file;
}

std::string serialize_series_file(const SeriesFile& file) {
    json j;
    j["schema_version"] = file.schema_version;
    j["series_id"] = file.series_id;
    j["order"] = file.order;
    j["coefficients"] = file.coefficients;
    return j.dump() + "\n";
}

SeriesFile parse_series_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed series file: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("malformed series file: not a JSON object");
    for (const char* key : {"schema_version", "series_id", "order", "coefficients"})
        if (!j.contains(key))
            throw std::runtime_error(std::string("series file missing field '") + key + "'");

    SeriesFile file;
    file.schema_version = j.at("schema_version").get<int>();
    if (file.schema_version != kSeriesFileSchemaVersion)
        throw std::runtime_error("series file schema mismatch: got version " +
                                 std::to_string(file.schema_version) + ", expected " +
                                 std::to_string(kSeriesFileSchemaVersion));
    file.series_id = j.at("series_id").get<std::string>();
    file.order = j.at("order").get<int>();
    if (file.order < 0) throw std::runtime_error("series file has negative order");
    for (const auto& entry : j.at("coefficients"))
        file.coefficients.push_back(canonical_or_throw(entry.get<std::string>()));
    if (static_cast<int>(file.coefficients.size()) != file.order + 1)
        throw std::runtime_error("series file order " + std::to_string(file.order) +
                                 " does not match " + std::to_string(file.coefficients.size()) +
                                 " coefficients");
    return file;
}

PowerSeries to_power_series(const SeriesFile& file) {
    std::vector<Rational> coeffs;
    coeffs.reserve(file.coefficients.size());
    for (const std::string& text : file.coefficients) coeffs.push_back(Rational::from_string(text));
    return PowerSeries(std::move(coeffs));
}

std::filesystem::path series_file_path(const std::filesystem::path& dir,
                                       const std::string& series_id) {
    return dir / (series_id + ".json");
}

void write_series_file_atomic(const std::filesystem::path& dir, const SeriesFile& file) {
    std::filesystem::create_directories(dir);
    const auto target = series_file_path(dir, file.series_id);
    const auto temp = target.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + temp + " for writing");
        out << serialize_series_file(file);
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + temp);
    }
    std::filesystem::rename(temp, target);
}

std::optional<PowerSeries> load_cached_series(const std::filesystem::path& dir,
                                              const std::string& series_id, int order) {
    const auto path = series_file_path(dir, series_id);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const SeriesFile file = parse_series_file(text);
    if (file.series_id != series_id)
        throw std::runtime_error("series file " + path.string() + " declares id '" +
                                 file.series_id + "'");
    if (file.order < order) return std::nullopt; // cache miss, caller recomputes
    PowerSeries series = to_power_series(file);
    return series.order() == order ? series : series.truncated(order);
}

} // namespace yzq::cli
