#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wlct/core.hpp"

namespace wlct {

/// Every knob of a CLI run. Zero-valued numeric fields select the library defaults.
struct RunConfig {
    std::string signal = "x1";
    int variant = 2;
    double alpha = 0.0;  ///< 0 tunes alpha by entropy
    std::string alphas;  ///< comma-separated search grid; empty selects the default grid
    std::size_t nc = 0;
    std::string grid;    ///< empty selects the family's natural axis (positive-only for y2, z3)
    double r0 = 0.0;
    double a0 = 0.0;
    double da = 0.05;
    std::size_t hop = 1;
    std::size_t tuneHop = 1;
    double dgamma = 0.0;
    double dxi = 0.0;
    double epsilon = 1e-4;  ///< mask threshold relative to the frame maximum of |T|
    bool xray = false;
    std::size_t n0 = 64;
    double dv = 0.0;
    std::size_t k = 0;  ///< 0 takes the benchmark's component count (2 for files)
    std::uint64_t seed = 1;
    double snr = 15.0;
    double ell = 2.5;
    double ridgeFit = 0.5;  ///< ridge fit half-width in seconds; 0 keeps raw bins
    std::string out = "out";
};

/// Flat "key = value" lines; '#' starts a comment. Throws ParseError.
std::map<std::string, std::string> parse_key_values(const std::string& text, const std::string& origin);
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Applies one key; throws ParseError on unknown keys or malformed values.
void apply_setting(RunConfig& c, const std::string& key, const std::string& value);
void apply_settings(RunConfig& c, const std::map<std::string, std::string>& kv);

/// Resolved configuration in the same key = value format, fixed key order.
std::string to_text(const RunConfig& c);

std::vector<double> parse_list(const std::string& s);

}  // namespace wlct
