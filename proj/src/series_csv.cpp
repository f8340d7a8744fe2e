#include "fgx/series_csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "fgx/raster.hpp"

namespace fgx {

namespace {

// Splits one record into cells, honouring double-quoted fields.
std::vector<std::string> split_record(const std::string& line, std::size_t line_no) {
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cells.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cells.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.emplace_back();
        } else {
            cells.back() += ch;
        }
    }
    if (quoted) throw FormatError("line " + std::to_string(line_no) + ": unterminated quoted cell");
    return cells;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<double> read_series(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const auto cells = split_record(line, line_no);
        if (cells.size() != 1)
            throw FormatError("line " + std::to_string(line_no) + ": expected one column, found " +
                              std::to_string(cells.size()));
        const auto cell = strip(cells[0]);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size())
            throw FormatError("line " + std::to_string(line_no) + ": non-numeric cell '" + std::string(cell) + "'");
        values.push_back(v);
    }
    if (in.bad()) throw IoError("read failed");
    return values;
}

std::vector<double> read_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return read_series(in);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_series(std::ostream& out, std::string_view header, std::span<const double> values) {
    out << header << '\n';
    const auto old_precision = out.precision(17);
    for (double v : values) out << v << '\n';
    out.precision(old_precision);
}

}  // namespace fgx
