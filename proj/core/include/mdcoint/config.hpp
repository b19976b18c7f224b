#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mdcoint/errors.hpp"

namespace mdcoint {

/// Minimal INI-style configuration: [section] headers, key = value lines,
/// '#' or ';' comments. Section and key order is preserved so serialization
/// is deterministic.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    int get_int_or(const std::string& section, const std::string& key, int fallback) const;
    std::uint64_t get_u64_or(const std::string& section, const std::string& key,
                             std::uint64_t fallback) const;
    /// Comma-separated list of reals.
    std::vector<double> get_double_list(const std::string& section,
                                        const std::string& key) const;

    void set(const std::string& section, const std::string& key, const std::string& value);

    std::string to_string() const;

private:
    using Section = std::vector<std::pair<std::string, std::string>>;
    std::vector<std::pair<std::string, Section>> sections_;

    const std::string* find(const std::string& section, const std::string& key) const;
};

}  // namespace mdcoint
