#include "thermal_sense/knn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "thermal_sense/errors.hpp"

namespace thermal_sense::classifiers {

std::string_view to_string(Weighting w) {
  return w == Weighting::Distance ? "distance" : "uniform";
}

std::optional<Weighting> parse_weighting(std::string_view text) {
  if (text == "uniform") return Weighting::Uniform;
  if (text == "distance") return Weighting::Distance;
  return std::nullopt;
}

KnnModel train_knn(const Dataset& train, std::size_t k, Weighting weighting) {
  if (k < 1 || k > train.size()) {
    throw InvalidInputError("k = " + std::to_string(k) +
                            " must lie in [1, " + std::to_string(train.size()) +
                            "]");
  }
  KnnModel model;
  model.k = k;
  model.weighting = weighting;
  model.features.reserve(train.size());
  model.labels.reserve(train.size());
  for (const auto& s : train.samples) {
    model.features.push_back(s.features);
    model.labels.push_back(s.label);
  }
  return model;
}

Label predict_knn(const KnnModel& model, FeatureView x) {
  const std::size_t n = model.features.size();
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < kPixelCount; ++j) {
      const double d = model.features[i][j] - x[j];
      acc += d * d;
    }
    d2[i] = acc;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t k = std::min(model.k, n);
  std::partial_sort(order.begin(), order.begin() + static_cast<long>(k),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      return d2[a] != d2[b] ? d2[a] < d2[b] : a < b;
                    });

  double person = 0.0;
  double no_person = 0.0;
  if (model.weighting == Weighting::Distance && d2[order[0]] == 0.0) {
    // Exact matches outvote everything else.
    for (std::size_t r = 0; r < k && d2[order[r]] == 0.0; ++r) {
      (model.labels[order[r]] == Label::Person ? person : no_person) += 1.0;
    }
  } else {
    for (std::size_t r = 0; r < k; ++r) {
      const double w = model.weighting == Weighting::Distance
                           ? 1.0 / std::sqrt(d2[order[r]])
                           : 1.0;
      (model.labels[order[r]] == Label::Person ? person : no_person) += w;
    }
  }
  return person > no_person ? Label::Person : Label::NoPerson;
}

}  // namespace thermal_sense::classifiers
