#pragma once

#include <cstdint>
#include <utility>

#include "thermal_sense/types.hpp"

namespace thermal_sense {

// Stratified hold-out split. Each class contributes
// floor(count * test_fraction + 0.5) samples to the test set. Both outputs
// keep the input's relative sample order.
std::pair<Dataset, Dataset> split_train_test(const Dataset& ds,
                                             double test_fraction,
                                             std::uint64_t seed);

// Stratified k-fold assignment; per-class fold counts differ by at most one.
FoldPlan make_folds(const Dataset& ds, std::size_t k, std::uint64_t seed);

// Largest difference, over classes, between the most and least populated
// fold of that class.
std::size_t max_stratum_imbalance(const Dataset& ds, const FoldPlan& plan);

}  // namespace thermal_sense
