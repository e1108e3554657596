#include "thermal_sense/metrics.hpp"

#include <string>

#include "thermal_sense/errors.hpp"

namespace thermal_sense::eval {

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& o) {
  tp += o.tp;
  fp += o.fp;
  tn += o.tn;
  fn += o.fn;
  return *this;
}

ConfusionCounts confusion(std::span<const Label> predicted,
                          std::span<const Label> truth) {
  if (predicted.size() != truth.size()) {
    throw InvalidInputError("prediction and truth lengths differ (" +
                            std::to_string(predicted.size()) + " vs " +
                            std::to_string(truth.size()) + ")");
  }
  if (predicted.empty()) throw InvalidInputError("no predictions to count");
  ConfusionCounts c;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const bool pred_person = predicted[i] == Label::Person;
    const bool is_person = truth[i] == Label::Person;
    if (pred_person && is_person) ++c.tp;
    else if (pred_person) ++c.fp;
    else if (is_person) ++c.fn;
    else ++c.tn;
  }
  return c;
}

double accuracy(const ConfusionCounts& c) {
  if (c.total() == 0) throw InvalidInputError("accuracy of zero predictions");
  return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

std::optional<double> sensitivity(const ConfusionCounts& c) {
  if (c.tp + c.fn == 0) return std::nullopt;
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
}

std::optional<double> specificity(const ConfusionCounts& c) {
  if (c.tn + c.fp == 0) return std::nullopt;
  return static_cast<double>(c.tn) / static_cast<double>(c.tn + c.fp);
}

MetricsReport MetricsReport::from_counts(const ConfusionCounts& c) {
  return MetricsReport{c, eval::accuracy(c), eval::sensitivity(c),
                       eval::specificity(c)};
}

}  // namespace thermal_sense::eval
