#include "wlct/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wlct/io.hpp"

namespace wlct {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size()) throw ParseError(key + ": not a number: '" + v + "'");
    return out;
}

template <class U>
U to_unsigned(const std::string& key, const std::string& v) {
    U out = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size()) throw ParseError(key + ": not an integer: '" + v + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw ParseError(key + ": expected on or off, got '" + v + "'");
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text, const std::string& origin) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(origin + ":" + std::to_string(n) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ParseError(origin + ":" + std::to_string(n) + ": empty key");
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_key_values(ss.str(), path);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_double("alphas", item));
    }
    return out;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
    const std::string& v = value;
    if (key == "signal") c.signal = v;
    else if (key == "variant") {
        c.variant = static_cast<int>(to_unsigned<unsigned>(key, v));
        if (c.variant != 1 && c.variant != 2 && c.variant != 5 && c.variant != 6)
            throw ParseError("variant must be 1, 2, 5 or 6");
    }
    else if (key == "alpha") c.alpha = to_double(key, v);
    else if (key == "alphas") { parse_list(v); c.alphas = v; }
    else if (key == "nc") c.nc = to_unsigned<std::size_t>(key, v);
    else if (key == "grid") {
        if (!v.empty()) grid_kind_from_string(v);
        c.grid = v;
    }
    else if (key == "r0") c.r0 = to_double(key, v);
    else if (key == "a0") c.a0 = to_double(key, v);
    else if (key == "da") c.da = to_double(key, v);
    else if (key == "hop") c.hop = to_unsigned<std::size_t>(key, v);
    else if (key == "tune_hop") c.tuneHop = to_unsigned<std::size_t>(key, v);
    else if (key == "dgamma") c.dgamma = to_double(key, v);
    else if (key == "dxi") c.dxi = to_double(key, v);
    else if (key == "epsilon") c.epsilon = to_double(key, v);
    else if (key == "xray") c.xray = to_bool(key, v);
    else if (key == "n0") c.n0 = to_unsigned<std::size_t>(key, v);
    else if (key == "dv") c.dv = to_double(key, v);
    else if (key == "k") c.k = to_unsigned<std::size_t>(key, v);
    else if (key == "seed") c.seed = to_unsigned<std::uint64_t>(key, v);
    else if (key == "snr") c.snr = to_double(key, v);
    else if (key == "ell") c.ell = to_double(key, v);
    else if (key == "ridge_fit") c.ridgeFit = to_double(key, v);
    else if (key == "out") c.out = v;
    else throw ParseError("unknown setting '" + key + "'");
}

void apply_settings(RunConfig& c, const std::map<std::string, std::string>& kv) {
    for (const auto& [k, v] : kv) apply_setting(c, k, v);
}

std::string to_text(const RunConfig& c) {
    std::ostringstream o;
    o << "signal = " << c.signal << '\n'
      << "variant = " << c.variant << '\n'
      << "alpha = " << fmt(c.alpha) << '\n'
      << "alphas = " << c.alphas << '\n'
      << "nc = " << c.nc << '\n'
      << "grid = " << c.grid << '\n'
      << "r0 = " << fmt(c.r0) << '\n'
      << "a0 = " << fmt(c.a0) << '\n'
      << "da = " << fmt(c.da) << '\n'
      << "hop = " << c.hop << '\n'
      << "tune_hop = " << c.tuneHop << '\n'
      << "dgamma = " << fmt(c.dgamma) << '\n'
      << "dxi = " << fmt(c.dxi) << '\n'
      << "epsilon = " << fmt(c.epsilon) << '\n'
      << "xray = " << (c.xray ? "on" : "off") << '\n'
      << "n0 = " << c.n0 << '\n'
      << "dv = " << fmt(c.dv) << '\n'
      << "k = " << c.k << '\n'
      << "seed = " << c.seed << '\n'
      << "snr = " << fmt(c.snr) << '\n'
      << "ell = " << fmt(c.ell) << '\n'
      << "ridge_fit = " << fmt(c.ridgeFit) << '\n'
      << "out = " << c.out << '\n';
    return o.str();
}

}  // namespace wlct
