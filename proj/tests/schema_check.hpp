#pragma once

// Minimal structural validator covering the subset of JSON Schema used by the
// schemas shipped in schemas/: type, required, properties, items, enum,
// pattern, propertyNames, additionalProperties, oneOf, $defs and local $ref.

#include <json.hpp>

#include <regex>
#include <string>

namespace napkin::testing {

using nlohmann::json;

inline bool matches_type(const json& inst, const std::string& t) {
    if (t == "object") return inst.is_object();
    if (t == "array") return inst.is_array();
    if (t == "string") return inst.is_string();
    if (t == "integer") return inst.is_number_integer() || inst.is_number_unsigned();
    if (t == "number") return inst.is_number();
    if (t == "boolean") return inst.is_boolean();
    if (t == "null") return inst.is_null();
    return false;
}

inline bool validate_schema(const json& inst, const json& schema, const json& root);

inline bool validate_object(const json& inst, const json& schema, const json& root) {
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!inst.contains(key.get<std::string>())) return false;
    const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    for (const auto& [key, value] : inst.items()) {
        if (schema.contains("propertyNames") &&
            !validate_schema(json(key), schema["propertyNames"], root))
            return false;
        if (props && props->contains(key)) {
            if (!validate_schema(value, (*props)[key], root)) return false;
        } else if (schema.contains("additionalProperties")) {
            if (!validate_schema(value, schema["additionalProperties"], root)) return false;
        }
    }
    return true;
}

inline bool validate_schema(const json& inst, const json& schema, const json& root) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"].get<std::string>();
        if (ref.rfind("#", 0) != 0) return false;
        return validate_schema(inst, root.at(json::json_pointer(ref.substr(1))), root);
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const auto& sub : schema["oneOf"]) hits += validate_schema(inst, sub, root);
        return hits == 1;
    }
    if (schema.contains("enum")) {
        for (const auto& v : schema["enum"])
            if (inst == v) return true;
        return false;
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        if (t.is_string()) {
            if (!matches_type(inst, t.get<std::string>())) return false;
        } else {
            bool any = false;
            for (const auto& tt : t) any |= matches_type(inst, tt.get<std::string>());
            if (!any) return false;
        }
    }
    if (schema.contains("pattern") && inst.is_string() &&
        !std::regex_search(inst.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
        return false;
    if (schema.contains("minimum") && inst.is_number() &&
        inst.get<double>() < schema["minimum"].get<double>())
        return false;
    if (inst.is_object() && !validate_object(inst, schema, root)) return false;
    if (inst.is_array() && schema.contains("items"))
        for (const auto& item : inst)
            if (!validate_schema(item, schema["items"], root)) return false;
    return true;
}

inline bool validate_schema(const json& inst, const json& schema) {
    return validate_schema(inst, schema, schema);
}

} // namespace napkin::testing
