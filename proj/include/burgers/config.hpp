#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "burgers/errors.hpp"

namespace burgers {

// Flat key-value config with [section] headers.  Entries keep insertion
// order so serialize() is deterministic and round-trips byte-identically.
// Environment variables BURGERS_<SECTION>_<KEY> override file values.
class Config {
public:
    struct Entry {
        std::string section;
        std::string key;
        std::string value;
    };

    Config() = default;

    static Config parse(std::string_view text) {
        Config cfg;
        std::string section;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string line = trim(text.substr(pos, eol - pos));
            pos = eol + 1;
            ++line_no;
            if (line.empty() || line[0] == '#' || line[0] == ';') continue;
            if (line.front() == '[') {
                require(line.back() == ']', ErrorKind::invalid_argument,
                        "unterminated section header",
                        {{"line", std::to_string(line_no)}});
                section = trim(std::string_view(line).substr(1, line.size() - 2));
                require(!section.empty(), ErrorKind::invalid_argument,
                        "empty section name", {{"line", std::to_string(line_no)}});
                continue;
            }
            std::size_t eq = line.find('=');
            require(eq != std::string::npos, ErrorKind::invalid_argument,
                    "expected key = value", {{"line", std::to_string(line_no)}});
            std::string key = trim(std::string_view(line).substr(0, eq));
            std::string value = trim(std::string_view(line).substr(eq + 1));
            require(!key.empty(), ErrorKind::invalid_argument, "empty key",
                    {{"line", std::to_string(line_no)}});
            cfg.set(section, key, value);
        }
        return cfg;
    }

    void set(const std::string& section, const std::string& key,
             const std::string& value) {
        for (auto& e : entries_) {
            if (e.section == section && e.key == key) {
                e.value = value;
                return;
            }
        }
        entries_.push_back({section, key, value});
    }

    bool has(const std::string& section, const std::string& key) const {
        return find(section, key) != nullptr;
    }

    const std::string& get_string(const std::string& section,
                                  const std::string& key) const {
        const Entry* e = find(section, key);
        require(e != nullptr, ErrorKind::invalid_argument, "missing config key",
                {{"key", qualified(section, key)}});
        return e->value;
    }

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
        const Entry* e = find(section, key);
        return e ? e->value : fallback;
    }

    double get_double(const std::string& section, const std::string& key) const {
        return parse_double(section, key, get_string(section, key));
    }

    double get_double(const std::string& section, const std::string& key,
                      double fallback) const {
        const Entry* e = find(section, key);
        return e ? parse_double(section, key, e->value) : fallback;
    }

    long get_int(const std::string& section, const std::string& key,
                 long fallback) const {
        const Entry* e = find(section, key);
        if (!e) return fallback;
        char* end = nullptr;
        long v = std::strtol(e->value.c_str(), &end, 10);
        require(end && *end == '\0', ErrorKind::invalid_argument,
                "config value is not an integer",
                {{"key", qualified(section, key)}, {"value", e->value}});
        return v;
    }

    // Comma-separated list of doubles, e.g. alphas = 0.5, 0.62, 0.66.
    std::vector<double> get_double_list(const std::string& section,
                                        const std::string& key) const {
        const std::string& raw = get_string(section, key);
        std::vector<double> out;
        std::size_t pos = 0;
        while (pos <= raw.size()) {
            std::size_t comma = raw.find(',', pos);
            if (comma == std::string::npos) comma = raw.size();
            std::string item = trim(std::string_view(raw).substr(pos, comma - pos));
            require(!item.empty(), ErrorKind::invalid_argument,
                    "empty item in numeric list",
                    {{"key", qualified(section, key)}, {"value", raw}});
            out.push_back(parse_double(section, key, item));
            pos = comma + 1;
        }
        return out;
    }

    // Rejects any entry whose section/key pair is not whitelisted.
    void validate_keys(
        const std::map<std::string, std::set<std::string>>& allowed) const {
        for (const auto& e : entries_) {
            auto it = allowed.find(e.section);
            require(it != allowed.end(), ErrorKind::unknown_config_key,
                    "unknown config section", {{"section", e.section}});
            require(it->second.count(e.key) > 0, ErrorKind::unknown_config_key,
                    "unknown config key", {{"key", qualified(e.section, e.key)}});
        }
    }

    // BURGERS_<SECTION>_<KEY>=value; section and key uppercased, '-' -> '_'.
    // Sections and keys here contain no '_', so the mapping is unambiguous.
    void apply_env_overrides(const std::map<std::string, std::set<std::string>>& allowed) {
        for (const auto& [section, keys] : allowed) {
            for (const auto& key : keys) {
                std::string name = "BURGERS_" + env_token(section) + "_" + env_token(key);
                const char* v = std::getenv(name.c_str());
                if (v) set(section, key, v);
            }
        }
    }

    std::string serialize() const {
        std::string out;
        std::string current;
        bool first = true;
        for (const auto& e : entries_) {
            if (e.section != current || first) {
                if (!first) out += "\n";
                if (!e.section.empty()) out += "[" + e.section + "]\n";
                current = e.section;
                first = false;
            }
            out += e.key + " = " + e.value + "\n";
        }
        return out;
    }

    const std::vector<Entry>& entries() const { return entries_; }

private:
    static std::string trim(std::string_view s) {
        std::size_t b = 0, e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
        return std::string(s.substr(b, e - b));
    }

    static std::string qualified(const std::string& section, const std::string& key) {
        return section.empty() ? key : section + "." + key;
    }

    static std::string env_token(const std::string& s) {
        std::string out;
        for (char c : s)
            out += (c == '-') ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return out;
    }

    static double parse_double(const std::string& section, const std::string& key,
                               const std::string& raw) {
        char* end = nullptr;
        double v = std::strtod(raw.c_str(), &end);
        require(end && *end == '\0' && end != raw.c_str(), ErrorKind::invalid_argument,
                "config value is not a number",
                {{"key", qualified(section, key)}, {"value", raw}});
        return v;
    }

    const Entry* find(const std::string& section, const std::string& key) const {
        for (const auto& e : entries_)
            if (e.section == section && e.key == key) return &e;
        return nullptr;
    }

    std::vector<Entry> entries_;
};

}  // namespace burgers
