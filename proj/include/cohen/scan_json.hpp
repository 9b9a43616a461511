#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "cohen/errors.hpp"
#include "cohen/scan.hpp"
#include "cohen/textio.hpp"

namespace cohen {

namespace detail {

// Numeric config parameters arrive as decimal strings so exact integers
// survive the trip; bare JSON numbers are tolerated.
inline double json_number(const nlohmann::json& v, const char* field) {
    try {
        if (v.is_string()) {
            std::size_t pos = 0;
            const std::string s = v.get<std::string>();
            double d = std::stod(s, &pos);
            if (pos != s.size()) throw DomainError("");
            return d;
        }
        if (v.is_number()) return v.get<double>();
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("scan config: field '") + field + "' is not a number");
}

inline std::uint64_t json_u64(const nlohmann::json& v, const char* field) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        try {
            std::size_t pos = 0;
            unsigned long long u = std::stoull(s, &pos);
            if (pos == s.size()) return u;
        } catch (const std::exception&) {
        }
    }
    throw DomainError(std::string("scan config: field '") + field +
                      "' is not an unsigned integer");
}

}  // namespace detail

inline ScanConfig scan_config_from_json(const nlohmann::json& j) {
    ScanConfig cfg;
    if (!j.contains("target")) throw DomainError("scan config: missing 'target'");
    const std::string target = j.at("target").get<std::string>();
    if (target == "prop1") cfg.target = Theorem::prop1;
    else if (target == "thm2") cfg.target = Theorem::thm2;
    else if (target == "thm3") cfg.target = Theorem::thm3;
    else if (target == "thm4") cfg.target = Theorem::thm4;
    else if (target == "thm5") cfg.target = Theorem::thm5;
    else throw DomainError("scan config: unknown target '" + target + "'");

    if (j.contains("beta")) cfg.beta = static_cast<std::uint32_t>(detail::json_u64(j.at("beta"), "beta"));
    if (j.contains("k")) cfg.k = static_cast<std::uint32_t>(detail::json_u64(j.at("k"), "k"));
    if (j.contains("z")) cfg.z1 = parse_complex(j.at("z").get<std::string>());
    if (j.contains("z1")) cfg.z1 = parse_complex(j.at("z1").get<std::string>());
    if (j.contains("z2")) cfg.z2 = parse_complex(j.at("z2").get<std::string>());
    if (!j.contains("x_grid")) throw DomainError("scan config: missing 'x_grid'");
    for (const auto& v : j.at("x_grid")) {
        cfg.x_grid.push_back(detail::json_u64(v, "x_grid"));
    }
    if (j.contains("y_rule")) cfg.y_rule = j.at("y_rule").get<std::string>();
    if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
    if (j.contains("threads")) {
        cfg.threads = static_cast<int>(detail::json_u64(j.at("threads"), "threads"));
    }
    return cfg;
}

inline ScanConfig load_scan_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open scan config " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw DomainError("scan config: invalid JSON: " + std::string(e.what()));
    }
    return scan_config_from_json(j);
}

// JSON mirror of the CSV rows plus the regression block.
inline nlohmann::json scan_to_json(const ScanResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : result.records) {
        rows.push_back({{"x", r.x},
                        {"y", r.y},
                        {"exact", r.exact},
                        {"main", r.main_term},
                        {"error", r.error},
                        {"bound", r.bound_shape},
                        {"normalized", r.normalized_error},
                        {"in_range", r.in_range},
                        {"status", r.status},
                        {"wall_time_ms", r.wall_time_ms}});
    }
    nlohmann::json reg{{"slope", result.regression.slope},
                       {"intercept", result.regression.intercept},
                       {"max_normalized_error", result.regression.max_normalized_error},
                       {"points_used", result.regression.points_used}};
    if (std::isnan(result.regression.slope)) reg["slope"] = nullptr;
    if (std::isnan(result.regression.intercept)) reg["intercept"] = nullptr;
    return nlohmann::json{{"records", rows}, {"regression", reg}};
}

}  // namespace cohen
