#pragma once

/**
 * @file config.hpp
 * @brief Run configuration and its flat key=value file format.
 */

#include "errors.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace monoratio {

struct RunConfig {
    double series_tol = 1e-13;
    double quad_tol = 1e-11;
    double h_zero_band = 1e-9;
    double oracle_noise_floor = 1e-9;
    int oracle_n = 4096;
    int fallback_n = 512;
    int horizon = 64;
    int max_horizon = 1024;
    std::string format = "json"; // json | csv
    std::uint64_t seed = 42;
    int draws_per_region = 20;

    void validate() const
    {
        if (!(series_tol > 0) || !(quad_tol > 0) || !(h_zero_band > 0) || !(oracle_noise_floor > 0))
            throw domain_error("config: tolerances must be positive");
        if (oracle_n < 64 || fallback_n < 64)
            throw domain_error("config: grid sizes must be at least 64");
        if (horizon < 2 || max_horizon < horizon)
            throw domain_error("config: need 2 <= horizon <= max_horizon");
        if (format != "json" && format != "csv")
            throw domain_error("config: format must be json or csv");
        if (draws_per_region < 1)
            throw domain_error("config: draws_per_region must be positive");
    }
};

/// Parse "key = value" lines; '#' starts a comment.
inline std::map<std::string, std::string> parse_key_values(std::istream& in)
{
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw domain_error("config line " + std::to_string(lineno) + ": expected key=value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

inline void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv)
{
    for (const auto& [k, v] : kv) {
        try {
            if (k == "series_tol")
                cfg.series_tol = std::stod(v);
            else if (k == "quad_tol")
                cfg.quad_tol = std::stod(v);
            else if (k == "h_zero_band")
                cfg.h_zero_band = std::stod(v);
            else if (k == "oracle_noise_floor")
                cfg.oracle_noise_floor = std::stod(v);
            else if (k == "oracle_n")
                cfg.oracle_n = std::stoi(v);
            else if (k == "fallback_n")
                cfg.fallback_n = std::stoi(v);
            else if (k == "horizon")
                cfg.horizon = std::stoi(v);
            else if (k == "max_horizon")
                cfg.max_horizon = std::stoi(v);
            else if (k == "format")
                cfg.format = v;
            else if (k == "seed")
                cfg.seed = std::stoull(v);
            else if (k == "draws_per_region")
                cfg.draws_per_region = std::stoi(v);
            else
                throw domain_error("config: unknown key '" + k + "'");
        } catch (const std::invalid_argument&) {
            throw domain_error("config: bad value for '" + k + "': " + v);
        } catch (const std::out_of_range&) {
            throw domain_error("config: value out of range for '" + k + "': " + v);
        }
    }
}

inline RunConfig load_config_file(const std::string& path, RunConfig base = {})
{
    std::ifstream in(path);
    if (!in)
        throw domain_error("cannot open config file " + path);
    apply_key_values(base, parse_key_values(in));
    base.validate();
    return base;
}

} // namespace monoratio
