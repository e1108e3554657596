#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "thermal_sense/types.hpp"

namespace thermal_sense::eval {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  ConfusionCounts& operator+=(const ConfusionCounts& o);

  friend bool operator==(const ConfusionCounts&,
                         const ConfusionCounts&) = default;
};

// Throws InvalidInputError on length mismatch or empty input.
ConfusionCounts confusion(std::span<const Label> predicted,
                          std::span<const Label> truth);

// (tp + tn) / total. Throws InvalidInputError when total == 0.
double accuracy(const ConfusionCounts& c);
// std::nullopt is the undefined marker (no positives / no negatives).
std::optional<double> sensitivity(const ConfusionCounts& c);
std::optional<double> specificity(const ConfusionCounts& c);

struct MetricsReport {
  ConfusionCounts counts;
  double accuracy = 0.0;
  std::optional<double> sensitivity;
  std::optional<double> specificity;

  static MetricsReport from_counts(const ConfusionCounts& c);

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

}  // namespace thermal_sense::eval
