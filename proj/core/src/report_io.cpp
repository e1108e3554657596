#include "thermal_sense/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "thermal_sense/errors.hpp"
#include "thermal_sense/text_io.hpp"

#ifndef THERMAL_SENSE_VERSION
#define THERMAL_SENSE_VERSION "0.0.0"
#endif

namespace thermal_sense::io {
namespace {

using json = nlohmann::ordered_json;
using eval::ConfusionCounts;
using eval::MetricsReport;

constexpr std::string_view kArtifact = "thermal-sense-report";

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json counts_json(const ConfusionCounts& c) {
  json j;
  j["tp"] = c.tp;
  j["fp"] = c.fp;
  j["tn"] = c.tn;
  j["fn"] = c.fn;
  return j;
}

json metrics_json(const MetricsReport& m) {
  json j = counts_json(m.counts);
  j["accuracy"] = m.accuracy;
  j["sensitivity"] = optional_number(m.sensitivity);
  j["specificity"] = optional_number(m.specificity);
  return j;
}

json cv_json(const CvSummary& cv) {
  json j;
  j["folds"] = json::array();
  for (const auto& f : cv.folds) j["folds"].push_back(metrics_json(f));
  j["mean-accuracy"] = cv.mean_accuracy;
  j["std-accuracy"] = cv.std_accuracy;
  j["pooled"] = counts_json(cv.pooled);
  return j;
}

json evaluation_json(const EvaluationRecord& e) {
  json j;
  j["model"] = e.model;
  j["overall"] = metrics_json(e.report.overall);
  j["by-condition"] = json::object();
  for (const auto& [tag, m] : e.report.by_condition) {
    j["by-condition"][std::string(to_string(tag))] = metrics_json(m);
  }
  return j;
}

[[noreturn]] void bad(std::string_view field, const std::string& what) {
  // JSON reports are validated structurally; line 0 means "whole document".
  throw FormatError(0, std::string(field), what);
}

const json& member(const json& j, std::string_view key) {
  if (!j.is_object() || !j.contains(key)) {
    bad(key, "missing member");
  }
  return j.at(std::string(key));
}

std::size_t count_field(const json& j, std::string_view key) {
  const json& v = member(j, key);
  if (!v.is_number_unsigned()) bad(key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

double number_field(const json& j, std::string_view key) {
  const json& v = member(j, key);
  if (!v.is_number()) bad(key, "expected a number");
  return v.get<double>();
}

std::optional<double> optional_field(const json& j, std::string_view key) {
  const json& v = member(j, key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) bad(key, "expected a number or null");
  return v.get<double>();
}

ConfusionCounts counts_from(const json& j) {
  return {count_field(j, "tp"), count_field(j, "fp"), count_field(j, "tn"),
          count_field(j, "fn")};
}

MetricsReport metrics_from(const json& j) {
  const ConfusionCounts c = counts_from(j);
  if (c.total() == 0) bad("counts", "no evaluated samples");
  MetricsReport m;
  m.counts = c;
  m.accuracy = number_field(j, "accuracy");
  m.sensitivity = optional_field(j, "sensitivity");
  m.specificity = optional_field(j, "specificity");
  if (!(m == MetricsReport::from_counts(c))) {
    bad("metrics", "metrics do not match their confusion counts");
  }
  return m;
}

CvSummary cv_from(const json& j) {
  CvSummary cv;
  const json& folds = member(j, "folds");
  if (!folds.is_array()) bad("folds", "expected an array");
  eval::CvResult recomputed;
  for (const auto& f : folds) {
    cv.folds.push_back(metrics_from(f));
    recomputed.folds.push_back(cv.folds.back());
  }
  cv.mean_accuracy = number_field(j, "mean-accuracy");
  cv.std_accuracy = number_field(j, "std-accuracy");
  cv.pooled = counts_from(member(j, "pooled"));
  eval::summarize(recomputed);
  if (!(CvSummary::from(recomputed) == cv)) {
    bad("cross-validation", "summary does not match its folds");
  }
  return cv;
}

EvaluationRecord evaluation_from(const json& j) {
  EvaluationRecord e;
  const json& model = member(j, "model");
  if (!model.is_string()) bad("model", "expected a string");
  e.model = model.get<std::string>();
  e.report.overall = metrics_from(member(j, "overall"));
  const json& by = member(j, "by-condition");
  if (!by.is_object()) bad("by-condition", "expected an object");
  for (auto it = by.begin(); it != by.end(); ++it) {
    const auto tag = parse_condition(it.key());
    if (!tag) bad("by-condition", "unknown condition '" + it.key() + "'");
    e.report.by_condition[*tag] = metrics_from(it.value());
  }
  return e;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(0, "json", e.what());
  }
}

std::string percent(std::optional<double> v) {
  if (!v) return "n/a";
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << (*v * 100.0) << "%";
  return s.str();
}

std::string csv_value(std::optional<double> v) {
  return v ? format_shortest(*v) : "";
}

}  // namespace

std::string tool_version() { return THERMAL_SENSE_VERSION; }

CvSummary CvSummary::from(const eval::CvResult& r) {
  return {r.folds, r.mean_accuracy, r.std_accuracy, r.pooled};
}

std::string format_metrics(const MetricsReport& m) {
  return dump(metrics_json(m));
}

MetricsReport parse_metrics(std::string_view text) {
  return metrics_from(parse_json(text));
}

std::string format_report(const RunReport& report) {
  json j;
  j["format-version"] = kReportFormatVersion;
  j["artifact"] = kArtifact;
  j["tool-version"] = report.tool_version;
  j["command"] = report.command;
  j["config"] = json::object();
  for (const auto& [k, v] : report.config) {
    if (j["config"].contains(k)) {
      throw InvalidInputError("duplicate report config key '" + k + "'");
    }
    j["config"][k] = v;
  }
  if (report.metrics) j["metrics"] = metrics_json(*report.metrics);
  if (report.cv) j["cross-validation"] = cv_json(*report.cv);
  if (!report.sweep.empty()) {
    j["sweep"] = json::array();
    for (const auto& row : report.sweep) {
      json r;
      r["config"] = row.config;
      r["cross-validation"] = cv_json(row.cv);
      j["sweep"].push_back(r);
    }
  }
  if (!report.evaluations.empty()) {
    j["evaluations"] = json::array();
    for (const auto& e : report.evaluations) {
      j["evaluations"].push_back(evaluation_json(e));
    }
  }
  return dump(j);
}

RunReport parse_report(std::string_view text) {
  const json j = parse_json(text);
  const json& version = member(j, "format-version");
  if (!version.is_number_integer()) bad("format-version", "expected an integer");
  const auto v = version.get<long long>();
  if (v > kReportFormatVersion || v < 1) {
    throw VersionError("report format-version " + std::to_string(v) +
                       " is not supported (max " +
                       std::to_string(kReportFormatVersion) + ")");
  }
  if (member(j, "artifact") != kArtifact) bad("artifact", "not a report");

  RunReport r;
  const json& tv = member(j, "tool-version");
  const json& cmd = member(j, "command");
  if (!tv.is_string() || !cmd.is_string()) bad("header", "expected strings");
  r.tool_version = tv.get<std::string>();
  r.command = cmd.get<std::string>();
  const json& config = member(j, "config");
  if (!config.is_object()) bad("config", "expected an object");
  for (auto it = config.begin(); it != config.end(); ++it) {
    if (!it.value().is_string()) bad("config", "values must be strings");
    r.config.emplace_back(it.key(), it.value().get<std::string>());
  }
  if (j.contains("metrics")) r.metrics = metrics_from(j.at("metrics"));
  if (j.contains("cross-validation")) r.cv = cv_from(j.at("cross-validation"));
  if (j.contains("sweep")) {
    for (const auto& row : j.at("sweep")) {
      const json& cfg = member(row, "config");
      if (!cfg.is_string()) bad("config", "expected a string");
      r.sweep.push_back(
          {cfg.get<std::string>(), cv_from(member(row, "cross-validation"))});
    }
  }
  if (j.contains("evaluations")) {
    for (const auto& e : j.at("evaluations")) {
      r.evaluations.push_back(evaluation_from(e));
    }
  }
  return r;
}

void save_report(const RunReport& report, const std::filesystem::path& path) {
  write_file_atomic(path, format_report(report));
}

RunReport load_report(const std::filesystem::path& path) {
  return parse_report(read_file(path));
}

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  out << "tool-version: " << report.tool_version << "\n";
  out << "command: " << report.command << "\n";
  for (const auto& [k, v] : report.config) out << "config." << k << ": " << v << "\n";
  if (report.metrics) {
    const auto& m = *report.metrics;
    out << "tp=" << m.counts.tp << " fp=" << m.counts.fp
        << " tn=" << m.counts.tn << " fn=" << m.counts.fn << "\n";
    out << "accuracy: " << percent(m.accuracy)
        << "  sensitivity: " << percent(m.sensitivity)
        << "  specificity: " << percent(m.specificity) << "\n";
  }
  if (report.cv) {
    out << "folds: " << report.cv->folds.size() << "\n";
    for (std::size_t f = 0; f < report.cv->folds.size(); ++f) {
      out << "  fold " << f << ": " << percent(report.cv->folds[f].accuracy)
          << "\n";
    }
    out << "mean accuracy: " << percent(report.cv->mean_accuracy)
        << "  std: " << percent(report.cv->std_accuracy) << "\n";
  }
  if (!report.sweep.empty()) {
    out << std::left << std::setw(36) << "config" << std::setw(12) << "mean"
        << "std\n";
    for (const auto& row : report.sweep) {
      out << std::left << std::setw(36) << row.config << std::setw(12)
          << percent(row.cv.mean_accuracy) << percent(row.cv.std_accuracy)
          << "\n";
    }
  }
  for (const auto& e : report.evaluations) {
    out << "model: " << e.model << "\n";
    out << std::left << std::setw(14) << "subset" << std::setw(6) << "n"
        << std::setw(11) << "accuracy" << std::setw(13) << "sensitivity"
        << "specificity\n";
    auto line = [&](std::string_view name, const MetricsReport& m) {
      out << std::left << std::setw(14) << name << std::setw(6)
          << m.counts.total() << std::setw(11) << percent(m.accuracy)
          << std::setw(13) << percent(m.sensitivity) << percent(m.specificity)
          << "\n";
    };
    line("overall", e.report.overall);
    for (const auto& [tag, m] : e.report.by_condition) line(to_string(tag), m);
  }
  return out.str();
}

std::string sweep_plot_csv(std::string_view family,
                           std::span<const SweepRecord> rows) {
  std::string out = "family,config,mean_accuracy,std_accuracy\n";
  for (const auto& r : rows) {
    out += std::string(family) + "," + r.config + "," +
           format_shortest(r.cv.mean_accuracy) + "," +
           format_shortest(r.cv.std_accuracy) + "\n";
  }
  return out;
}

std::string overall_plot_csv(std::span<const EvaluationRecord> evals) {
  std::string out = "model,accuracy,sensitivity,specificity\n";
  for (const auto& e : evals) {
    const auto& m = e.report.overall;
    out += e.model + "," + format_shortest(m.accuracy) + "," +
           csv_value(m.sensitivity) + "," + csv_value(m.specificity) + "\n";
  }
  return out;
}

std::string condition_plot_csv(std::span<const EvaluationRecord> evals) {
  std::string out = "model,condition,n,accuracy,sensitivity,specificity\n";
  for (const auto& e : evals) {
    for (const auto& [tag, m] : e.report.by_condition) {
      out += e.model + "," + std::string(to_string(tag)) + "," +
             std::to_string(m.counts.total()) + "," +
             format_shortest(m.accuracy) + "," + csv_value(m.sensitivity) +
             "," + csv_value(m.specificity) + "\n";
    }
  }
  return out;
}

}  // namespace thermal_sense::io
