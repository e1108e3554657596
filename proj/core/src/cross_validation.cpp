#include "thermal_sense/cross_validation.hpp"

#include <cmath>
#include <string>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/parallel.hpp"

namespace thermal_sense::eval {

void summarize(CvResult& result) {
  result.pooled = {};
  if (result.folds.empty()) {
    result.mean_accuracy = 0.0;
    result.std_accuracy = 0.0;
    return;
  }
  double sum = 0.0;
  for (const auto& f : result.folds) {
    sum += f.accuracy;
    result.pooled += f.counts;
  }
  const double n = static_cast<double>(result.folds.size());
  result.mean_accuracy = sum / n;
  double ss = 0.0;
  for (const auto& f : result.folds) {
    const double d = f.accuracy - result.mean_accuracy;
    ss += d * d;
  }
  result.std_accuracy = std::sqrt(ss / n);
}

CvResult cross_validate(const Dataset& ds, const FoldPlan& plan,
                        const classifiers::ClassifierSpec& spec,
                        std::size_t threads) {
  if (plan.assignment.size() != ds.size()) {
    throw InvalidInputError("fold plan covers " +
                            std::to_string(plan.assignment.size()) +
                            " samples but the dataset has " +
                            std::to_string(ds.size()));
  }
  for (std::size_t f : plan.assignment) {
    if (f >= plan.num_folds) throw InvalidInputError("fold index out of range");
  }

  CvResult result;
  result.folds.resize(plan.num_folds);
  result.predictions.assign(ds.size(), Label::NoPerson);
  std::vector<std::vector<std::size_t>> test_sets(plan.num_folds);
  for (std::size_t f = 0; f < plan.num_folds; ++f) {
    test_sets[f] = plan.test_indices(f);
    if (test_sets[f].empty()) {
      throw InvalidInputError("fold " + std::to_string(f) + " is empty");
    }
  }

  parallel_for(plan.num_folds, threads, [&](std::size_t f) {
    const Dataset train = ds.subset(plan.train_indices(f), ds.name + "-train");
    if (train.count(Label::Person) == 0 || train.count(Label::NoPerson) == 0) {
      throw StratificationError("training portion of fold " +
                                std::to_string(f) + " lacks a class");
    }
    const auto model = classifiers::train(spec, train);
    std::vector<Label> predicted, truth;
    for (std::size_t i : test_sets[f]) {
      const Label p = classifiers::predict(model, ds.samples[i].features);
      result.predictions[i] = p;
      predicted.push_back(p);
      truth.push_back(ds.samples[i].label);
    }
    result.folds[f] = MetricsReport::from_counts(confusion(predicted, truth));
  });
  summarize(result);
  return result;
}

}  // namespace thermal_sense::eval
