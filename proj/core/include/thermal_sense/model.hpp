#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "thermal_sense/knn.hpp"
#include "thermal_sense/nn.hpp"
#include "thermal_sense/svm.hpp"

namespace thermal_sense::classifiers {

struct KnnSpec {
  std::size_t k = 1;
  Weighting weighting = Weighting::Uniform;
};

struct SvmSpec {
  SvmParams params;
};

struct NnSpec {
  std::size_t hidden = 128;
  NnHyperparams hyperparams;
  std::uint64_t seed = 0;
};

// What to train: family plus hyperparameters.
using ClassifierSpec = std::variant<KnnSpec, SvmSpec, NnSpec>;

using TrainedModel = std::variant<KnnModel, SvmModel, NnModel>;

TrainedModel train(const ClassifierSpec& spec, const Dataset& train);
Label predict(const TrainedModel& model, FeatureView x);
std::vector<Label> predict_all(const TrainedModel& model, const Dataset& ds);

// "knn", "svm" or "nn".
std::string_view family_name(const ClassifierSpec& spec);
std::string_view family_name(const TrainedModel& model);

// Short human-readable config, e.g. "knn k=3 weighting=distance".
std::string describe(const ClassifierSpec& spec);

}  // namespace thermal_sense::classifiers
