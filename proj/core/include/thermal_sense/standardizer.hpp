#pragma once

#include "thermal_sense/types.hpp"

namespace thermal_sense {

// Per-feature z-score fitted on a training set. Features with zero variance
// keep a unit scale so they map to 0 instead of NaN.
struct Standardizer {
  Features mean{};
  Features scale{};

  static Standardizer fit(const Dataset& train);
  static Standardizer identity();

  Features apply(FeatureView x) const;

  friend bool operator==(const Standardizer&, const Standardizer&) = default;
};

}  // namespace thermal_sense
