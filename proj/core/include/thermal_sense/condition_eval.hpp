#pragma once

#include <map>

#include "thermal_sense/metrics.hpp"
#include "thermal_sense/model.hpp"

namespace thermal_sense::eval {

struct ConditionReport {
  MetricsReport overall;
  // Only the conditions present in the evaluated data.
  std::map<ConditionTag, MetricsReport> by_condition;

  friend bool operator==(const ConditionReport&,
                         const ConditionReport&) = default;
};

ConditionReport evaluate_by_condition(const classifiers::TrainedModel& model,
                                      const Dataset& ds);

// Same, from precomputed predictions (one per sample).
ConditionReport evaluate_by_condition(std::span<const Label> predicted,
                                      const Dataset& ds);

}  // namespace thermal_sense::eval
