#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "thermal_sense/types.hpp"

namespace thermal_sense::io {

// Header: p00,p01,...,p77,label,condition
std::string dataset_header();

// CSV text for a dataset: header plus one LF-terminated line per sample,
// temperatures with exactly two decimals.
std::string format_dataset(const Dataset& ds);

// Strict inverse of format_dataset(); anything the writer could not have
// produced is rejected with a FormatError naming the line and field.
Dataset parse_dataset(std::string_view text, std::string name);

void save_dataset(const Dataset& ds, const std::filesystem::path& path);
// The dataset name is the file stem.
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace thermal_sense::io
