#include "thermal_sense/standardizer.hpp"

#include <cmath>

#include "thermal_sense/errors.hpp"

namespace thermal_sense {

Standardizer Standardizer::fit(const Dataset& train) {
  if (train.empty()) throw InvalidInputError("cannot standardize empty data");
  Standardizer s;
  const double n = static_cast<double>(train.size());
  for (const auto& sample : train.samples) {
    for (std::size_t j = 0; j < kPixelCount; ++j) s.mean[j] += sample.features[j];
  }
  for (double& m : s.mean) m /= n;
  Features var{};
  for (const auto& sample : train.samples) {
    for (std::size_t j = 0; j < kPixelCount; ++j) {
      const double d = sample.features[j] - s.mean[j];
      var[j] += d * d;
    }
  }
  for (std::size_t j = 0; j < kPixelCount; ++j) {
    const double sd = std::sqrt(var[j] / n);
    s.scale[j] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

Standardizer Standardizer::identity() {
  Standardizer s;
  s.scale.fill(1.0);
  return s;
}

Features Standardizer::apply(FeatureView x) const {
  Features z{};
  for (std::size_t j = 0; j < kPixelCount; ++j) z[j] = (x[j] - mean[j]) / scale[j];
  return z;
}

}  // namespace thermal_sense
