#include <algorithm>
#include <string>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/types.hpp"

namespace thermal_sense {

std::string_view to_string(Label label) {
  return label == Label::Person ? "person" : "no_person";
}

std::string_view to_string(ConditionTag tag) {
  switch (tag) {
    case ConditionTag::Baseline: return "baseline";
    case ConditionTag::HotRoom: return "hot_room";
    case ConditionTag::WaterBottle: return "water_bottle";
    case ConditionTag::Duvet0min: return "duvet_0";
    case ConditionTag::Duvet5min: return "duvet_5";
    case ConditionTag::Duvet10min: return "duvet_10";
  }
  return "unknown";
}

std::optional<Label> parse_label(std::string_view text) {
  if (text == "person") return Label::Person;
  if (text == "no_person") return Label::NoPerson;
  return std::nullopt;
}

std::optional<ConditionTag> parse_condition(std::string_view text) {
  for (ConditionTag tag : kAllConditions) {
    if (to_string(tag) == text) return tag;
  }
  return std::nullopt;
}

LabeledSample make_sample(const ThermalFrame& frame, Label label,
                          ConditionTag condition) {
  return LabeledSample{frame.pixels(), label, condition};
}

std::size_t Dataset::count(Label label) const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(),
                    [label](const LabeledSample& s) { return s.label == label; }));
}

Dataset Dataset::subset(std::span<const std::size_t> indices,
                        std::string subset_name) const {
  Dataset out;
  out.name = std::move(subset_name);
  out.samples.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= samples.size()) {
      throw InvalidInputError("sample index " + std::to_string(i) +
                              " out of range");
    }
    out.samples.push_back(samples[i]);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != fold) out.push_back(i);
  }
  return out;
}

}  // namespace thermal_sense
