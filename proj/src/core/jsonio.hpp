#pragma once
// Strict-schema helpers over nlohmann::json. Configs reject unknown fields:
// silent misconfiguration is the main reproducibility hazard.

#include <json.hpp>

#include <set>
#include <stdexcept>
#include <string>

namespace ergo::io {

using json = nlohmann::json;

inline void require_fields(const json& j, const std::string& where,
                           const std::set<std::string>& required,
                           const std::set<std::string>& optional = {}) {
    if (!j.is_object())
        throw std::runtime_error(where + ": expected a JSON object");
    for (const auto& k : required)
        if (!j.contains(k))
            throw std::runtime_error(where + ": missing field '" + k + "'");
    for (const auto& [key, _] : j.items()) {
        if (!required.count(key) && !optional.count(key))
            throw std::runtime_error(where + ": unknown field '" + key + "'");
    }
}

inline void require_schema(const json& j, const std::string& where,
                           const std::string& schema) {
    if (!j.contains("schema") || !j.at("schema").is_string() ||
        j.at("schema").get<std::string>() != schema)
        throw std::runtime_error(where + ": expected schema \"" + schema + "\"");
}

// FNV-1a/64 content digest of a canonical (sorted-key, compact) dump.
inline std::string config_digest(const json& j) {
    const std::string s = j.dump();  // nlohmann objects iterate in sorted key order
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ergo::io
