#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace fgx {

// Single-column numeric CSV: one header row, then one real per line. Quoted
// cells are accepted. Throws IoError when the file cannot be read and
// FormatError on a non-numeric cell or extra columns. A file with no data
// rows yields an empty vector.
std::vector<double> read_series(std::istream& in);
std::vector<double> read_series(const std::filesystem::path& path);

void write_series(std::ostream& out, std::string_view header, std::span<const double> values);

}  // namespace fgx
