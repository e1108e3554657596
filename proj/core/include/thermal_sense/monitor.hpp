#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thermal_sense/types.hpp"

namespace thermal_sense::monitor {

using Timestamp = std::int64_t;  // seconds

enum class Occupancy { Unknown, Occupied, Empty };
enum class EventKind { BedExit, FrequentExits, Return };

std::string_view to_string(Occupancy occupancy);
std::string_view to_string(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view text);

struct MonitorConfig {
  std::size_t debounce_frames = 3;
  Timestamp long_absence = 15 * 60;
  Timestamp window = 8 * 60 * 60;
  std::size_t max_exits = 5;

  void validate() const;  // throws ConfigError
};

struct Event {
  Timestamp ts = 0;
  EventKind kind = EventKind::BedExit;

  friend bool operator==(const Event&, const Event&) = default;
};

struct MonitorState {
  Occupancy current = Occupancy::Unknown;
  // Timestamp of the first frame of the run that established `current`.
  Timestamp since = 0;
  std::optional<Timestamp> last_ts;
  // Start times of recent exits, oldest first, pruned to the window.
  std::deque<Timestamp> exits;
  // Length of the current run of frames that disagree with `current`, the
  // occupancy that run points to, and when it started.
  std::size_t debounce = 0;
  Occupancy pending = Occupancy::Unknown;
  Timestamp pending_since = 0;
  bool bed_exit_reported = false;

  friend bool operator==(const MonitorState&, const MonitorState&) = default;
};

struct StepResult {
  MonitorState state;
  std::vector<Event> events;
};

// Occupancy changes only after cfg.debounce_frames consecutive frames agree
// on the new value. Events:
//   Return         when Empty becomes Occupied (at the confirming frame);
//   BedExit        once per Empty episode, at the first frame where the
//                  episode has lasted at least cfg.long_absence;
//   FrequentExits  at an Occupied -> Empty change that brings the number of
//                  exits started within the trailing cfg.window above
//                  cfg.max_exits.
// The first confirmed state after Unknown emits nothing, and an Empty state
// reached from Unknown is not an exit. Throws StreamError
// unless ts is strictly greater than the previous frame's.
StepResult step(const MonitorState& state, Label label, Timestamp ts,
                const MonitorConfig& cfg);

struct LabeledTick {
  Timestamp ts = 0;
  Label label = Label::NoPerson;
};

// Folds step() over a whole trace from the initial state.
std::vector<Event> replay(std::span<const LabeledTick> trace,
                          const MonitorConfig& cfg);

}  // namespace thermal_sense::monitor
