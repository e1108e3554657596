#include "thermal_sense/fold_io.hpp"

#include <string>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/text_io.hpp"

namespace thermal_sense::io {
namespace {

std::string_view expect_key(std::string_view line, std::size_t line_no,
                            std::string_view key) {
  const std::string prefix = std::string(key) + ": ";
  if (line.substr(0, prefix.size()) != prefix) {
    throw FormatError(line_no, std::string(key), "expected '" + prefix + "'");
  }
  return line.substr(prefix.size());
}

}  // namespace

std::string format_fold_plan(const FoldPlan& plan) {
  std::string out;
  out += "format-version: " + std::to_string(kFoldPlanFormatVersion) + "\n";
  out += "artifact: fold-plan\n";
  out += "num-folds: " + std::to_string(plan.num_folds) + "\n";
  out += "samples: " + std::to_string(plan.assignment.size()) + "\n";
  for (std::size_t f : plan.assignment) out += std::to_string(f) + "\n";
  return out;
}

FoldPlan parse_fold_plan(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 4) throw FormatError(lines.size() + 1, "header", "truncated header");
  const auto version =
      parse_int(expect_key(lines[0], 1, "format-version"), 1, "format-version");
  if (version > kFoldPlanFormatVersion || version < 1) {
    throw VersionError("fold plan format-version " + std::to_string(version) +
                       " is not supported (max " +
                       std::to_string(kFoldPlanFormatVersion) + ")");
  }
  if (expect_key(lines[1], 2, "artifact") != "fold-plan") {
    throw FormatError(2, "artifact", "not a fold plan");
  }
  const auto folds = parse_int(expect_key(lines[2], 3, "num-folds"), 3, "num-folds");
  const auto samples = parse_int(expect_key(lines[3], 4, "samples"), 4, "samples");
  if (folds < 2) throw FormatError(3, "num-folds", "must be at least 2");
  if (samples < 0 || static_cast<std::size_t>(samples) != lines.size() - 4) {
    throw FormatError(4, "samples", "does not match the number of rows");
  }
  FoldPlan plan;
  plan.num_folds = static_cast<std::size_t>(folds);
  plan.assignment.reserve(static_cast<std::size_t>(samples));
  for (std::size_t li = 4; li < lines.size(); ++li) {
    const auto f = parse_int(lines[li], li + 1, "fold");
    if (f < 0 || f >= folds || std::to_string(f) != lines[li]) {
      throw FormatError(li + 1, "fold", "fold index out of range");
    }
    plan.assignment.push_back(static_cast<std::size_t>(f));
  }
  return plan;
}

void save_fold_plan(const FoldPlan& plan, const std::filesystem::path& path) {
  write_file_atomic(path, format_fold_plan(plan));
}

FoldPlan load_fold_plan(const std::filesystem::path& path) {
  return parse_fold_plan(read_file(path));
}

}  // namespace thermal_sense::io
