#pragma once

// Structural validator for the subset of JSON Schema the report schema uses:
// type, required, properties, items, enum. Reports the first violation path.

#include <optional>
#include <string>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const std::string& type, const json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline std::optional<std::string> validate(const json& schema, const json& value,
                                           const std::string& path = "$") {
    if (schema.contains("type") && !type_matches(schema["type"].get<std::string>(), value))
        return path + ": expected type " + schema["type"].get<std::string>();
    if (schema.contains("enum")) {
        bool hit = false;
        for (const json& candidate : schema["enum"])
            if (candidate == value) hit = true;
        if (!hit) return path + ": value not in enum";
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const json& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    return path + ": missing required key '" + key.get<std::string>() + "'";
        if (schema.contains("properties"))
            for (auto it = value.begin(); it != value.end(); ++it)
                if (schema["properties"].contains(it.key()))
                    if (auto err = validate(schema["properties"][it.key()], it.value(),
                                            path + "." + it.key()))
                        return err;
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const json& element : value) {
            if (auto err = validate(schema["items"], element,
                                    path + "[" + std::to_string(i) + "]"))
                return err;
            ++i;
        }
    }
    return std::nullopt;
}

}  // namespace schema_check
