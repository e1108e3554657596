#include "thermal_sense/monitor_io.hpp"

#include <string>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/text_io.hpp"

namespace thermal_sense::io {

std::vector<monitor::LabeledTick> parse_trace(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "timestamp,label") {
    throw FormatError(1, "header", "expected 'timestamp,label'");
  }
  std::vector<monitor::LabeledTick> trace;
  trace.reserve(lines.size() - 1);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto fields = split(lines[li], ',');
    if (fields.size() != 2) {
      throw FormatError(li + 1, "row", "expected 2 fields");
    }
    monitor::LabeledTick tick;
    tick.ts = parse_int(fields[0], li + 1, "timestamp");
    const auto label = parse_label(fields[1]);
    if (!label) throw FormatError(li + 1, "label", "unknown label");
    tick.label = *label;
    trace.push_back(tick);
  }
  return trace;
}

std::string format_trace(std::span<const monitor::LabeledTick> trace) {
  std::string out = "timestamp,label\n";
  for (const auto& t : trace) {
    out += std::to_string(t.ts) + "," + std::string(to_string(t.label)) + "\n";
  }
  return out;
}

std::string format_events(std::span<const monitor::Event> events,
                          std::string_view bed_id) {
  std::string out = "timestamp,event_kind,bed_id\n";
  for (const auto& e : events) {
    out += std::to_string(e.ts) + "," + std::string(to_string(e.kind)) + "," +
           std::string(bed_id) + "\n";
  }
  return out;
}

}  // namespace thermal_sense::io
