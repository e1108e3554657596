#pragma once

#include <vector>

#include "thermal_sense/metrics.hpp"
#include "thermal_sense/model.hpp"

namespace thermal_sense::eval {

struct CvResult {
  std::vector<MetricsReport> folds;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // population standard deviation over folds
  ConfusionCounts pooled;     // sum of per-fold counts
  // Out-of-fold prediction for every sample, in dataset order.
  std::vector<Label> predictions;

  friend bool operator==(const CvResult&, const CvResult&) = default;
};

// Mean and population std of the per-fold accuracies.
void summarize(CvResult& result);

// Trains on every fold but f and evaluates on f, for each f. Throws
// InvalidInputError when the plan does not match the dataset and
// StratificationError when a training portion lacks a class.
CvResult cross_validate(const Dataset& ds, const FoldPlan& plan,
                        const classifiers::ClassifierSpec& spec,
                        std::size_t threads = 1);

}  // namespace thermal_sense::eval
