#include "thermal_sense/condition_eval.hpp"

#include "thermal_sense/errors.hpp"

namespace thermal_sense::eval {

ConditionReport evaluate_by_condition(std::span<const Label> predicted,
                                      const Dataset& ds) {
  if (ds.empty()) throw InvalidInputError("evaluation dataset is empty");
  if (predicted.size() != ds.size()) {
    throw InvalidInputError("one prediction per sample required");
  }
  std::map<ConditionTag, std::pair<std::vector<Label>, std::vector<Label>>>
      groups;
  std::vector<Label> truth;
  truth.reserve(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& s = ds.samples[i];
    truth.push_back(s.label);
    auto& g = groups[s.condition];
    g.first.push_back(predicted[i]);
    g.second.push_back(s.label);
  }
  ConditionReport report;
  report.overall = MetricsReport::from_counts(confusion(predicted, truth));
  for (const auto& [tag, g] : groups) {
    report.by_condition[tag] =
        MetricsReport::from_counts(confusion(g.first, g.second));
  }
  return report;
}

ConditionReport evaluate_by_condition(const classifiers::TrainedModel& model,
                                      const Dataset& ds) {
  if (ds.empty()) throw InvalidInputError("evaluation dataset is empty");
  const auto predicted = classifiers::predict_all(model, ds);
  return evaluate_by_condition(predicted, ds);
}

}  // namespace thermal_sense::eval
