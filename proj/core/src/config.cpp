#include "mdcoint/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mdcoint {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    double v = 0.0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw ConfigError(where + ": '" + text + "' is not a number");
    return v;
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

Config Config::parse_string(const std::string& text) {
    Config cfg;
    std::stringstream ss(text);
    std::string line;
    std::string section;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty())
                throw ConfigError("config line " + std::to_string(lineno) + ": empty section name");
            if (!cfg.has_section(section)) cfg.sections_.push_back({section, {}});
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value, got '" + t + "'");
        if (section.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": key outside any [section]");
        cfg.set(section, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

bool Config::has_section(const std::string& section) const {
    for (const auto& [name, _] : sections_)
        if (name == section) return true;
    return false;
}

const std::string* Config::find(const std::string& section, const std::string& key) const {
    for (const auto& [name, entries] : sections_) {
        if (name != section) continue;
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
    }
    return nullptr;
}

bool Config::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

std::string Config::get(const std::string& section, const std::string& key) const {
    const std::string* v = find(section, key);
    if (!v) throw ConfigError("config is missing [" + section + "] " + key);
    return *v;
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
    const std::string* v = find(section, key);
    return v ? *v : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    return parse_double(get(section, key), "[" + section + "] " + key);
}

double Config::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const {
    const std::string* v = find(section, key);
    return v ? parse_double(*v, "[" + section + "] " + key) : fallback;
}

int Config::get_int_or(const std::string& section, const std::string& key, int fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    return static_cast<int>(parse_double(*v, "[" + section + "] " + key));
}

std::uint64_t Config::get_u64_or(const std::string& section, const std::string& key,
                                 std::uint64_t fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    const std::string t = trim(*v);
    std::uint64_t out = 0;
    auto res = std::from_chars(t.data(), t.data() + t.size(), out);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw ConfigError("[" + section + "] " + key + ": '" + *v +
                          "' is not an unsigned integer");
    return out;
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
    const std::string raw = get(section, key);
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(item, "[" + section + "] " + key));
    return out;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
    for (auto& [name, entries] : sections_) {
        if (name != section) continue;
        for (auto& [k, v] : entries) {
            if (k == key) {
                v = value;
                return;
            }
        }
        entries.push_back({key, value});
        return;
    }
    sections_.push_back({section, {{key, value}}});
}

std::string Config::to_string() const {
    std::string out;
    for (const auto& [name, entries] : sections_) {
        out += "[" + name + "]\n";
        for (const auto& [k, v] : entries) out += k + " = " + v + "\n";
        out += "\n";
    }
    return out;
}

}  // namespace mdcoint
