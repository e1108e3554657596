#include "thermal_sense/dataset_io.hpp"

#include <string>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/text_io.hpp"

namespace thermal_sense::io {
namespace {

std::string pixel_name(std::size_t i) {
  return "p" + std::to_string(i / kGridSize) + std::to_string(i % kGridSize);
}

}  // namespace

std::string dataset_header() {
  std::string h;
  for (std::size_t i = 0; i < kPixelCount; ++i) h += pixel_name(i) + ",";
  h += "label,condition";
  return h;
}

std::string format_dataset(const Dataset& ds) {
  std::string out = dataset_header();
  out += '\n';
  out.reserve(out.size() + ds.size() * (kPixelCount * 6 + 24));
  for (const auto& s : ds.samples) {
    for (double v : s.features) {
      out += format_fixed2(v);
      out += ',';
    }
    out += to_string(s.label);
    out += ',';
    out += to_string(s.condition);
    out += '\n';
  }
  return out;
}

Dataset parse_dataset(std::string_view text, std::string name) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw FormatError(1, "header", "file is empty");
  if (lines[0] != dataset_header()) {
    throw FormatError(1, "header", "unexpected dataset header");
  }
  Dataset ds;
  ds.name = std::move(name);
  ds.samples.reserve(lines.size() - 1);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    const auto fields = split(lines[li], ',');
    if (fields.size() != kPixelCount + 2) {
      throw FormatError(line_no, "row",
                        "expected " + std::to_string(kPixelCount + 2) +
                            " fields, found " + std::to_string(fields.size()));
    }
    LabeledSample s;
    for (std::size_t i = 0; i < kPixelCount; ++i) {
      const std::string field = pixel_name(i);
      const double v = parse_double(fields[i], line_no, field);
      if (!is_valid_temperature(v)) {
        throw FormatError(line_no, field,
                          "not a quarter-degree value in [20, 100]");
      }
      if (format_fixed2(v) != fields[i]) {
        throw FormatError(line_no, field,
                          "temperature must have exactly two decimals");
      }
      s.features[i] = v;
    }
    const auto label = parse_label(fields[kPixelCount]);
    if (!label) throw FormatError(line_no, "label", "unknown label");
    const auto condition = parse_condition(fields[kPixelCount + 1]);
    if (!condition) throw FormatError(line_no, "condition", "unknown condition");
    s.label = *label;
    s.condition = *condition;
    ds.samples.push_back(s);
  }
  return ds;
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
  write_file_atomic(path, format_dataset(ds));
}

Dataset load_dataset(const std::filesystem::path& path) {
  return parse_dataset(read_file(path), path.stem().string());
}

}  // namespace thermal_sense::io
