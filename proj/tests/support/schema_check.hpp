#pragma once

// A small JSON Schema checker covering the subset the report schema uses:
// type (single or list), enum, required, properties, additionalProperties
// (false or schema), items, anyOf, and local "#/definitions/..." refs.

#include <string>
#include <vector>

#include <json.hpp>

namespace testsupport {

class SchemaChecker {
public:
    explicit SchemaChecker(nlohmann::json schema) : root_(std::move(schema)) {}

    bool validate(const nlohmann::json& value, std::string* why = nullptr) const {
        std::vector<std::string> path;
        std::string reason;
        bool ok = check(root_, value, path, reason);
        if (!ok && why) *why = reason;
        return ok;
    }

private:
    static std::string join(const std::vector<std::string>& path) {
        std::string out = "$";
        for (const auto& p : path) out += "." + p;
        return out;
    }

    const nlohmann::json& resolve(const nlohmann::json& schema) const {
        if (schema.contains("$ref")) {
            std::string ref = schema.at("$ref").get<std::string>();
            const std::string prefix = "#/definitions/";
            if (ref.rfind(prefix, 0) == 0) {
                return root_.at("definitions").at(ref.substr(prefix.size()));
            }
            throw std::runtime_error("unsupported $ref " + ref);
        }
        return schema;
    }

    static bool type_matches(const std::string& type, const nlohmann::json& value) {
        if (type == "object") return value.is_object();
        if (type == "array") return value.is_array();
        if (type == "string") return value.is_string();
        if (type == "boolean") return value.is_boolean();
        if (type == "null") return value.is_null();
        if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
        if (type == "number") return value.is_number();
        return false;
    }

    bool check(const nlohmann::json& raw_schema, const nlohmann::json& value,
               std::vector<std::string>& path, std::string& reason) const {
        const nlohmann::json& schema = resolve(raw_schema);

        if (schema.contains("anyOf")) {
            for (const auto& option : schema.at("anyOf")) {
                std::string ignored;
                std::vector<std::string> sub_path = path;
                if (check(option, value, sub_path, ignored)) return true;
            }
            reason = join(path) + ": no anyOf branch matched";
            return false;
        }

        if (schema.contains("type")) {
            const auto& type = schema.at("type");
            bool matched = false;
            if (type.is_string()) {
                matched = type_matches(type.get<std::string>(), value);
            } else {
                for (const auto& t : type) matched |= type_matches(t.get<std::string>(), value);
            }
            if (!matched) {
                reason = join(path) + ": type mismatch, got " + value.dump().substr(0, 60);
                return false;
            }
        }

        if (schema.contains("enum")) {
            bool found = false;
            for (const auto& candidate : schema.at("enum")) found |= candidate == value;
            if (!found) {
                reason = join(path) + ": value " + value.dump() + " not in enum";
                return false;
            }
        }

        if (value.is_object()) {
            if (schema.contains("required")) {
                for (const auto& name : schema.at("required")) {
                    if (!value.contains(name.get<std::string>())) {
                        reason = join(path) + ": missing required key " + name.get<std::string>();
                        return false;
                    }
                }
            }
            const auto* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
            for (const auto& [key, member] : value.items()) {
                path.push_back(key);
                if (props && props->contains(key)) {
                    if (!check(props->at(key), member, path, reason)) return false;
                } else if (schema.contains("additionalProperties")) {
                    const auto& extra = schema.at("additionalProperties");
                    if (extra.is_boolean()) {
                        if (!extra.get<bool>()) {
                            reason = join(path) + ": unexpected key";
                            return false;
                        }
                    } else if (!check(extra, member, path, reason)) {
                        return false;
                    }
                }
                path.pop_back();
            }
        }

        if (value.is_array() && schema.contains("items")) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                path.push_back(std::to_string(i));
                if (!check(schema.at("items"), value[i], path, reason)) return false;
                path.pop_back();
            }
        }
        return true;
    }

    nlohmann::json root_;
};

}  // namespace testsupport
