#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace thermal_sense::io {

// Shortest decimal string that parses back to exactly `v`.
std::string format_shortest(double v);
// Fixed two-decimal rendering used for quantized temperatures.
std::string format_fixed2(double v);

// Whole-string parse; no leading '+', whitespace, or trailing characters.
// Throws FormatError citing `line` and `field` on failure.
double parse_double(std::string_view text, std::size_t line,
                    std::string_view field);
long long parse_int(std::string_view text, std::size_t line,
                    std::string_view field);

std::vector<std::string_view> split(std::string_view text, char sep);

// Splits on '\n'. Rejects '\r' anywhere and requires a final newline.
// The returned views point into `text`.
std::vector<std::string_view> split_lines(std::string_view text);

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace thermal_sense::io
