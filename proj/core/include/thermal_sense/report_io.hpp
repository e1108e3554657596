#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thermal_sense/condition_eval.hpp"
#include "thermal_sense/cross_validation.hpp"
#include "thermal_sense/metrics.hpp"

namespace thermal_sense::io {

inline constexpr int kReportFormatVersion = 1;

std::string tool_version();

// Cross-validation summary as stored in reports (predictions are not kept).
struct CvSummary {
  std::vector<eval::MetricsReport> folds;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;
  eval::ConfusionCounts pooled;

  static CvSummary from(const eval::CvResult& r);
  friend bool operator==(const CvSummary&, const CvSummary&) = default;
};

struct SweepRecord {
  std::string config;
  CvSummary cv;
  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// Named evaluation of one trained model on one dataset.
struct EvaluationRecord {
  std::string model;
  eval::ConditionReport report;
  friend bool operator==(const EvaluationRecord&,
                         const EvaluationRecord&) = default;
};

// Machine-readable run report. Every report carries the tool version, the
// subcommand and its fully resolved configuration; the optional sections
// hold whatever the subcommand produced.
struct RunReport {
  std::string tool_version;
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::optional<eval::MetricsReport> metrics;
  std::optional<CvSummary> cv;
  std::vector<SweepRecord> sweep;
  std::vector<EvaluationRecord> evaluations;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// JSON with a fixed key order, two-space indent and a trailing newline.
// Throws InvalidInputError when a config key repeats.
std::string format_report(const RunReport& report);
// Throws VersionError for a newer format-version, FormatError otherwise.
RunReport parse_report(std::string_view text);

void save_report(const RunReport& report, const std::filesystem::path& path);
RunReport load_report(const std::filesystem::path& path);

std::string format_metrics(const eval::MetricsReport& m);
eval::MetricsReport parse_metrics(std::string_view text);

// Human-readable key/value and table rendering for terminals.
std::string render_text(const RunReport& report);

// Per-figure CSV tables.
// family,config,mean_accuracy,std_accuracy
std::string sweep_plot_csv(std::string_view family,
                           std::span<const SweepRecord> rows);
// model,accuracy,sensitivity,specificity
std::string overall_plot_csv(std::span<const EvaluationRecord> evals);
// model,condition,n,accuracy,sensitivity,specificity
std::string condition_plot_csv(std::span<const EvaluationRecord> evals);

}  // namespace thermal_sense::io
