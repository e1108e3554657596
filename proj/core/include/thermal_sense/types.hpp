#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thermal_sense {

inline constexpr std::size_t kGridSize = 8;
inline constexpr std::size_t kPixelCount = kGridSize * kGridSize;

// Sensor output limits (Grid-EYE: 20..100 degC in quarter-degree steps).
inline constexpr double kMinTempC = 20.0;
inline constexpr double kMaxTempC = 100.0;
inline constexpr double kTempStepC = 0.25;

// NoPerson = 0, Person = 1. Person is the positive class.
enum class Label : std::uint8_t { NoPerson = 0, Person = 1 };

enum class ConditionTag : std::uint8_t {
  Baseline = 0,
  HotRoom,
  WaterBottle,
  Duvet0min,
  Duvet5min,
  Duvet10min,
};

inline constexpr std::array<ConditionTag, 6> kAllConditions = {
    ConditionTag::Baseline,  ConditionTag::HotRoom,   ConditionTag::WaterBottle,
    ConditionTag::Duvet0min, ConditionTag::Duvet5min, ConditionTag::Duvet10min,
};

// File-format spellings: "person"/"no_person", "baseline", "hot_room", ...
std::string_view to_string(Label label);
std::string_view to_string(ConditionTag tag);
std::optional<Label> parse_label(std::string_view text);
std::optional<ConditionTag> parse_condition(std::string_view text);

using Features = std::array<double, kPixelCount>;
using FeatureView = std::span<const double, kPixelCount>;

// One 8x8 frame of quantized temperatures, row-major, row 0 at the bed head.
// Only constructible through quantize() or from_pixels(), so every instance
// satisfies the range and quarter-degree invariants.
class ThermalFrame {
 public:
  // Throws InvalidInputError if any pixel is outside [20, 100] or is not a
  // multiple of 0.25.
  static ThermalFrame from_pixels(const Features& pixels);

  double at(std::size_t row, std::size_t col) const {
    return pixels_[row * kGridSize + col];
  }
  const Features& pixels() const { return pixels_; }

  friend bool operator==(const ThermalFrame&, const ThermalFrame&) = default;

 private:
  explicit ThermalFrame(const Features& pixels) : pixels_(pixels) {}

  Features pixels_{};
};

// True if v lies in the sensor range and is an exact multiple of 0.25.
bool is_valid_temperature(double v);

struct LabeledSample {
  Features features{};
  Label label = Label::NoPerson;
  ConditionTag condition = ConditionTag::Baseline;

  friend bool operator==(const LabeledSample&, const LabeledSample&) = default;
};

// Validates the 64 features against the frame invariants.
LabeledSample make_sample(const ThermalFrame& frame, Label label,
                          ConditionTag condition);

struct Dataset {
  std::string name;
  std::vector<LabeledSample> samples;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  std::size_t count(Label label) const;

  // Samples at the given indices, in the given order.
  Dataset subset(std::span<const std::size_t> indices,
                 std::string subset_name) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

struct FoldPlan {
  std::size_t num_folds = 0;
  std::vector<std::size_t> assignment;  // per sample, in [0, num_folds)

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;

  friend bool operator==(const FoldPlan&, const FoldPlan&) = default;
};

}  // namespace thermal_sense
