#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "thermal_sense/monitor.hpp"

namespace thermal_sense::io {

// "timestamp,label" header, then integer seconds and person/no_person.
std::vector<monitor::LabeledTick> parse_trace(std::string_view text);
std::string format_trace(std::span<const monitor::LabeledTick> trace);

// "timestamp,event_kind,bed_id" header, then one line per event.
std::string format_events(std::span<const monitor::Event> events,
                          std::string_view bed_id);

}  // namespace thermal_sense::io
