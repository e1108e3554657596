#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thermal_sense/cross_validation.hpp"

namespace thermal_sense::eval {

enum class SweepFamily { SvmKernels, KnnGrid, NnWidths };

std::string_view to_string(SweepFamily family);
std::optional<SweepFamily> parse_family(std::string_view text);

struct SweepRow {
  std::string config;  // describe() of the spec
  classifiers::ClassifierSpec spec;
  CvResult result;
};

// The grid for a family: SVM kernels {linear, polynomial, rbf, sigmoid};
// k-NN k in {1, 3, 5, 7} x {uniform, distance}; NN widths 1, 2, 4, ... 1024.
// `nn_template` supplies the NN hyperparameters and seed.
std::vector<classifiers::ClassifierSpec> sweep_grid(
    SweepFamily family, const classifiers::NnSpec& nn_template = {});

// One cross-validation per grid cell, all on the same plan. Cells run on up
// to `threads` workers; output order is the grid order.
std::vector<SweepRow> sweep(const Dataset& ds, const FoldPlan& plan,
                            SweepFamily family,
                            const classifiers::NnSpec& nn_template = {},
                            std::size_t threads = 1);

}  // namespace thermal_sense::eval
