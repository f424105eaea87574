#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "burgers/errors.hpp"

namespace burgers {

// FNV-1a, 64-bit. Stable across platforms; used to stamp outputs with the
// effective configuration so runs can be matched to their inputs.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

// %.17g: shortest round-trippable decimal form for IEEE doubles.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

// CSV with '#'-prefixed metadata lines before the single header row.
// All lines LF-terminated; numeric cells use format_double.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void metadata(std::string_view key, std::string_view value) {
        require(!header_written_, ErrorKind::invalid_argument,
                "metadata must precede the header row");
        out_ << "# " << key << ": " << value << "\n";
    }

    void header(const std::vector<std::string>& names) {
        require(!header_written_, ErrorKind::invalid_argument, "header written twice");
        write_cells(names);
        header_written_ = true;
        columns_ = names.size();
    }

    void row(const std::vector<double>& values) {
        require(header_written_, ErrorKind::invalid_argument, "row before header");
        require(values.size() == columns_, ErrorKind::invalid_argument,
                "row width does not match header",
                {{"expected", std::to_string(columns_)},
                 {"got", std::to_string(values.size())}});
        std::vector<std::string> cells;
        cells.reserve(values.size());
        for (double v : values) cells.push_back(format_double(v));
        write_cells(cells);
    }

private:
    void write_cells(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << "\n";
    }

    std::ostream& out_;
    bool header_written_ = false;
    std::size_t columns_ = 0;
};

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorKind::invalid_argument,
            "cannot open file", {{"path", path}});
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return text;
}

inline void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorKind::invalid_argument,
            "cannot open file for writing", {{"path", path}});
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace burgers
