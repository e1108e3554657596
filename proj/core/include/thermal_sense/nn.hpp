#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "thermal_sense/standardizer.hpp"
#include "thermal_sense/types.hpp"

namespace thermal_sense::classifiers {

inline constexpr std::size_t kMaxHidden = 1024;

struct NnHyperparams {
  double learning_rate = 0.01;
  std::size_t batch_size = 32;
  std::size_t epochs = 500;

  friend bool operator==(const NnHyperparams&, const NnHyperparams&) = default;
};

// 64 -> hidden (ReLU) -> 2 (softmax). Weights are row-major:
// w1[h * 64 + i], w2[o * hidden + h].
struct NnModel {
  std::size_t hidden = 0;
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  std::vector<double> b2;
  Standardizer standardizer = Standardizer::identity();
  NnHyperparams hyperparams;
  std::uint64_t seed = 0;

  // All parameters zero; every input maps to p(Person) = 0.5.
  static NnModel zeros(std::size_t hidden);

  std::size_t parameter_count() const;
  // Flat parameter vector in the order w1, b1, w2, b2.
  std::vector<double> parameters() const;
  void set_parameters(std::span<const double> flat);

  // Softmax probability of Person for a raw degC input.
  double probability_person(FeatureView x) const;
};

// Mini-batch SGD on mean cross-entropy. Per-epoch shuffles and the initial
// weights (He-uniform, biases zero) derive from `seed`. Throws ConfigError if
// hidden is outside [1, 1024] and TrainingError if the loss goes non-finite.
NnModel train_nn(const Dataset& train, std::size_t hidden,
                 const NnHyperparams& hp, std::uint64_t seed);

// Mean cross-entropy over the batch at the model's current parameters.
double nn_loss(const NnModel& model, std::span<const LabeledSample> batch);

// Backpropagated gradient of nn_loss, laid out like parameters().
std::vector<double> nn_gradient(const NnModel& model,
                                std::span<const LabeledSample> batch);

// argmax of the two outputs; an exact tie goes to NoPerson.
Label predict_nn(const NnModel& model, FeatureView x);

}  // namespace thermal_sense::classifiers
