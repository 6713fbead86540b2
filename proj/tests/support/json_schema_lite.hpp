#pragma once

// Minimal structural JSON-Schema checker covering exactly the subset used by
// the schemas shipped in schemas/: type (single or list), required,
// properties, additionalProperties (boolean), items (single schema), enum of
// strings, pattern, minimum. Test-only.

#include <json.hpp>

#include <regex>
#include <string>
#include <vector>

namespace yzq::test {

namespace detail {

inline bool matches_type(const nlohmann::json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline void validate_node(const nlohmann::json& schema, const nlohmann::json& value,
                          const std::string& path, std::vector<std::string>& violations) {
    using nlohmann::json;

    if (schema.contains("type")) {
        const json& type = schema.at("type");
        bool ok = false;
        if (type.is_string()) {
            ok = matches_type(value, type.get<std::string>());
        } else {
            for (const auto& t : type) ok = ok || matches_type(value, t.get<std::string>());
        }
        if (!ok) {
            violations.push_back(path + ": type mismatch, expected " + type.dump());
            return;
        }
    }

    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& candidate : schema.at("enum")) found = found || candidate == value;
        if (!found) violations.push_back(path + ": value " + value.dump() + " not in enum");
    }

    if (schema.contains("pattern") && value.is_string()) {
        const std::regex re(schema.at("pattern").get<std::string>());
        if (!std::regex_match(value.get<std::string>(), re))
            violations.push_back(path + ": '" + value.get<std::string>() +
                                 "' does not match pattern");
    }

    if (schema.contains("minimum") && value.is_number()) {
        if (value.get<double>() < schema.at("minimum").get<double>())
            violations.push_back(path + ": below minimum");
    }

    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    violations.push_back(path + ": missing required field '" +
                                         key.get<std::string>() + "'");
        const json properties =
            schema.contains("properties") ? schema.at("properties") : json::object();
        for (const auto& [key, member] : value.items()) {
            if (properties.contains(key)) {
                validate_node(properties.at(key), member, path + "." + key, violations);
            } else if (schema.contains("additionalProperties") &&
                       schema.at("additionalProperties") == false) {
                violations.push_back(path + ": unexpected field '" + key + "'");
            }
        }
    }

    if (value.is_array() && schema.contains("items")) {
        int index = 0;
        for (const auto& element : value) {
            validate_node(schema.at("items"), element, path + "[" + std::to_string(index) + "]",
                          violations);
            ++index;
        }
    }
}

} // namespace detail

inline std::vector<std::string> validate_against_schema(const nlohmann::json& schema,
                                                        const nlohmann::json& value) {
    std::vector<std::string> violations;
    detail::validate_node(schema, value, "$", violations);
    return violations;
}

} // namespace yzq::test
