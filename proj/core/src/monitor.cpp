#include "thermal_sense/monitor.hpp"

#include <string>

#include "thermal_sense/errors.hpp"

namespace thermal_sense::monitor {

std::string_view to_string(Occupancy occupancy) {
  switch (occupancy) {
    case Occupancy::Unknown: return "unknown";
    case Occupancy::Occupied: return "occupied";
    case Occupancy::Empty: return "empty";
  }
  return "unknown";
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::BedExit: return "bed_exit";
    case EventKind::FrequentExits: return "frequent_exits";
    case EventKind::Return: return "return";
  }
  return "unknown";
}

std::optional<EventKind> parse_event_kind(std::string_view text) {
  for (auto k : {EventKind::BedExit, EventKind::FrequentExits,
                 EventKind::Return}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

void MonitorConfig::validate() const {
  if (debounce_frames < 1) throw ConfigError("debounce_frames must be >= 1");
  if (long_absence <= 0) throw ConfigError("long_absence must be positive");
  if (window <= 0) throw ConfigError("window must be positive");
}

StepResult step(const MonitorState& state, Label label, Timestamp ts,
                const MonitorConfig& cfg) {
  cfg.validate();
  if (state.last_ts && ts <= *state.last_ts) {
    throw StreamError("timestamp " + std::to_string(ts) +
                      " does not follow " + std::to_string(*state.last_ts));
  }
  StepResult out{state, {}};
  MonitorState& s = out.state;
  s.last_ts = ts;

  const Occupancy observed =
      label == Label::Person ? Occupancy::Occupied : Occupancy::Empty;
  if (observed == s.current) {
    s.debounce = 0;
  } else {
    if (s.debounce == 0 || s.pending != observed) {
      s.debounce = 0;
      s.pending = observed;
      s.pending_since = ts;
    }
    ++s.debounce;
    if (s.debounce >= cfg.debounce_frames) {
      const Occupancy previous = s.current;
      s.current = observed;
      s.since = s.pending_since;
      s.debounce = 0;
      if (observed == Occupancy::Empty) {
        // Starting the night with an empty bed is not an exit.
        s.bed_exit_reported = previous != Occupancy::Occupied;
        if (previous == Occupancy::Occupied) {
          s.exits.push_back(s.since);
          while (!s.exits.empty() && s.exits.front() <= ts - cfg.window) {
            s.exits.pop_front();
          }
          if (s.exits.size() > cfg.max_exits) {
            out.events.push_back({ts, EventKind::FrequentExits});
          }
        }
      } else if (previous == Occupancy::Empty) {
        out.events.push_back({ts, EventKind::Return});
      }
    }
  }

  if (s.current == Occupancy::Empty && !s.bed_exit_reported &&
      ts - s.since >= cfg.long_absence) {
    s.bed_exit_reported = true;
    out.events.push_back({ts, EventKind::BedExit});
  }
  return out;
}

std::vector<Event> replay(std::span<const LabeledTick> trace,
                          const MonitorConfig& cfg) {
  MonitorState state;
  std::vector<Event> events;
  for (const auto& tick : trace) {
    auto r = step(state, tick.label, tick.ts, cfg);
    state = std::move(r.state);
    events.insert(events.end(), r.events.begin(), r.events.end());
  }
  return events;
}

}  // namespace thermal_sense::monitor
