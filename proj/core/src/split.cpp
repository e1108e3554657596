#include "thermal_sense/split.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/rng.hpp"

namespace thermal_sense {
namespace {

constexpr std::array<Label, 2> kClasses = {Label::NoPerson, Label::Person};

// Indices of each class, shuffled by a per-class stream of `seed`.
std::array<std::vector<std::size_t>, 2> shuffled_strata(const Dataset& ds,
                                                        std::uint64_t seed) {
  std::array<std::vector<std::size_t>, 2> strata;
  for (std::size_t i = 0; i < ds.samples.size(); ++i) {
    strata[static_cast<std::size_t>(ds.samples[i].label)].push_back(i);
  }
  for (std::size_t c = 0; c < strata.size(); ++c) {
    Rng rng = Rng::for_item(seed, c);
    rng.shuffle(std::span<std::size_t>(strata[c]));
  }
  return strata;
}

}  // namespace

std::pair<Dataset, Dataset> split_train_test(const Dataset& ds,
                                             double test_fraction,
                                             std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw InvalidInputError("test fraction must lie strictly between 0 and 1");
  }
  auto strata = shuffled_strata(ds, seed);
  std::vector<bool> is_test(ds.samples.size(), false);
  for (std::size_t c = 0; c < strata.size(); ++c) {
    if (strata[c].empty()) {
      throw StratificationError(std::string("class '") +
                                std::string(to_string(kClasses[c])) +
                                "' has no samples");
    }
    // Round half up per class; the first n_test shuffled members go to test.
    const auto n_test = static_cast<std::size_t>(std::floor(
        static_cast<double>(strata[c].size()) * test_fraction + 0.5));
    for (std::size_t j = 0; j < n_test; ++j) is_test[strata[c][j]] = true;
  }

  std::vector<std::size_t> train_idx, test_idx;
  for (std::size_t i = 0; i < ds.samples.size(); ++i) {
    (is_test[i] ? test_idx : train_idx).push_back(i);
  }
  return {ds.subset(train_idx, ds.name + "-train"),
          ds.subset(test_idx, ds.name + "-test")};
}

FoldPlan make_folds(const Dataset& ds, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InvalidInputError("number of folds must be at least 2");
  auto strata = shuffled_strata(ds, seed);
  FoldPlan plan;
  plan.num_folds = k;
  plan.assignment.assign(ds.samples.size(), 0);
  // Round-robin within each class; the second class continues where the
  // first stopped so overall fold sizes also stay within one of each other.
  std::size_t offset = 0;
  for (std::size_t c = 0; c < strata.size(); ++c) {
    if (strata[c].size() < k) {
      throw StratificationError(
          std::string("class '") + std::string(to_string(kClasses[c])) +
          "' has " + std::to_string(strata[c].size()) +
          " samples, fewer than " + std::to_string(k) + " folds");
    }
    for (std::size_t p = 0; p < strata[c].size(); ++p) {
      plan.assignment[strata[c][p]] = (offset + p) % k;
    }
    offset = (offset + strata[c].size()) % k;
  }
  return plan;
}

std::size_t max_stratum_imbalance(const Dataset& ds, const FoldPlan& plan) {
  std::size_t worst = 0;
  for (Label cls : kClasses) {
    std::vector<std::size_t> counts(plan.num_folds, 0);
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
      if (ds.samples[i].label == cls) ++counts.at(plan.assignment.at(i));
    }
    if (counts.empty()) continue;
    auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    worst = std::max(worst, *hi - *lo);
  }
  return worst;
}

}  // namespace thermal_sense
