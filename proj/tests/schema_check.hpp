#pragma once

// Minimal JSON Schema checker covering the subset the shipped schemas use:
// type (string or list), properties, required, items, enum. Enough to keep
// the published schemas and the emitted JSON honest against each other.

#include <string>
#include <vector>

#include <json.hpp>

namespace testutil {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline void validate_schema(const json& value, const json& schema, const std::string& path,
                            std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(value, t.get<std::string>());
        } else {
            for (const auto& alt : t)
                if (type_matches(value, alt.get<std::string>())) ok = true;
        }
        if (!ok) {
            errors.push_back(path + ": type mismatch (got " + std::string(value.type_name()) +
                             ")");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"])
            if (value == alt) ok = true;
        if (!ok) errors.push_back(path + ": value not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(path + ": missing required key '" +
                                     key.get<std::string>() + "'");
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()))
                    validate_schema(value[it.key()], it.value(), path + "." + it.key(), errors);
    }
    if (value.is_array() && schema.contains("items")) {
        int i = 0;
        for (const auto& item : value)
            validate_schema(item, schema["items"], path + "[" + std::to_string(i++) + "]",
                            errors);
    }
}

inline std::vector<std::string> schema_errors(const json& value, const json& schema) {
    std::vector<std::string> errors;
    validate_schema(value, schema, "$", errors);
    return errors;
}

} // namespace testutil
