#include <gtest/gtest.h>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/monitor.hpp"

namespace thermal_sense::monitor {
namespace {

constexpr Label P = Label::Person;
constexpr Label N = Label::NoPerson;

// One frame per minute starting at t = 0.
std::vector<LabeledTick> minutes(std::initializer_list<std::pair<int, Label>> runs) {
  std::vector<LabeledTick> trace;
  Timestamp t = 0;
  for (auto [count, label] : runs) {
    for (int i = 0; i < count; ++i) {
      trace.push_back({t, label});
      t += 60;
    }
  }
  return trace;
}

TEST(Monitor, SingleFrameGlitchIsIgnored) {
  const auto trace = minutes({{10, P}, {1, N}, {10, P}, {2, N}, {10, P}});
  EXPECT_TRUE(replay(trace, {}).empty());
}

TEST(Monitor, DebounceHoldsTheState) {
  MonitorState s;
  MonitorConfig cfg;
  for (Timestamp t = 0; t < 3; ++t) s = step(s, P, t, cfg).state;
  EXPECT_EQ(s.current, Occupancy::Occupied);
  s = step(s, N, 3, cfg).state;
  s = step(s, N, 4, cfg).state;
  EXPECT_EQ(s.current, Occupancy::Occupied);
  s = step(s, N, 5, cfg).state;
  EXPECT_EQ(s.current, Occupancy::Empty);
  EXPECT_EQ(s.since, 3);
}

TEST(Monitor, LongAbsenceRaisesOneBedExit) {
  // Empty since t = 600 (minute 10); alert at minute 25.
  const auto trace = minutes({{10, P}, {40, N}});
  const auto events = replay(trace, {});
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0], (Event{25 * 60, EventKind::BedExit}));
}

TEST(Monitor, ShortAbsenceReturnsWithoutBedExit) {
  const auto trace = minutes({{10, P}, {5, N}, {10, P}});
  const auto events = replay(trace, {});
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0], (Event{17 * 60, EventKind::Return}));
}

TEST(Monitor, EmptyAtStartIsNotAnExit) {
  const auto trace = minutes({{60, N}, {5, P}});
  const auto events = replay(trace, {});
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].kind, EventKind::Return);
}

TEST(Monitor, FrequentExitsAfterTooManyInWindow) {
  MonitorConfig cfg;
  cfg.max_exits = 2;
  const auto trace = minutes({{5, P}, {4, N}, {5, P}, {4, N}, {5, P}, {4, N}, {5, P}});
  std::size_t frequent = 0, returns = 0;
  for (const auto& e : replay(trace, cfg)) {
    frequent += e.kind == EventKind::FrequentExits;
    returns += e.kind == EventKind::Return;
  }
  EXPECT_EQ(frequent, 1u);
  EXPECT_EQ(returns, 3u);
}

TEST(Monitor, OldExitsLeaveTheWindow) {
  MonitorConfig cfg;
  cfg.max_exits = 1;
  cfg.window = 10 * 60;
  const auto trace = minutes({{5, P}, {4, N}, {20, P}, {4, N}, {5, P}});
  for (const auto& e : replay(trace, cfg)) {
    EXPECT_NE(e.kind, EventKind::FrequentExits);
  }
}

TEST(Monitor, RejectsOutOfOrderTimestamps) {
  MonitorState s = step({}, P, 10, {}).state;
  EXPECT_THROW(step(s, P, 10, {}), StreamError);
  EXPECT_THROW(step(s, P, 5, {}), StreamError);
}

TEST(Monitor, RejectsBadConfig) {
  MonitorConfig cfg;
  cfg.debounce_frames = 0;
  EXPECT_THROW(step({}, P, 0, cfg), ConfigError);
}

TEST(Monitor, EventKindSpellings) {
  EXPECT_EQ(to_string(EventKind::BedExit), "bed_exit");
  EXPECT_EQ(parse_event_kind("frequent_exits"), EventKind::FrequentExits);
  EXPECT_FALSE(parse_event_kind("exit"));
}

}  // namespace
}  // namespace thermal_sense::monitor
