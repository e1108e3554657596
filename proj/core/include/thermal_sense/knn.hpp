#pragma once

#include <string_view>
#include <optional>

#include "thermal_sense/types.hpp"

namespace thermal_sense::classifiers {

enum class Weighting { Uniform, Distance };

std::string_view to_string(Weighting w);
std::optional<Weighting> parse_weighting(std::string_view text);

// Lazy learner: keeps the raw training samples (degC, not standardized).
struct KnnModel {
  std::vector<Features> features;
  std::vector<Label> labels;
  std::size_t k = 1;
  Weighting weighting = Weighting::Uniform;
};

// Throws InvalidInputError unless 1 <= k <= train.size().
KnnModel train_knn(const Dataset& train, std::size_t k, Weighting weighting);

// Euclidean distance to every stored sample; the k closest win (equal
// distances resolved toward the lower stored index). Uniform: majority vote.
// Distance: votes weighted by 1/d, except that any exact matches (d = 0)
// decide by their own majority. Vote ties go to NoPerson.
Label predict_knn(const KnnModel& model, FeatureView x);

}  // namespace thermal_sense::classifiers
