#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "thermal_sense/kernel.hpp"
#include "thermal_sense/standardizer.hpp"
#include "thermal_sense/types.hpp"

namespace thermal_sense::classifiers {

struct SvmParams {
  KernelKind kernel = KernelKind::Linear;
  double c = 1.0;
  double tol = 1e-3;
  int degree = 3;
  double coef0 = 0.0;
  // Unset: 1 / (64 * variance of all standardized training values).
  std::optional<double> gamma;
  std::size_t max_iterations = 1'000'000;
};

// Dual-form binary SVM over standardized features. Labels map to
// y = +1 (Person) and y = -1 (NoPerson).
struct SvmModel {
  KernelSpec kernel;
  Standardizer standardizer;
  std::vector<Features> support_vectors;  // standardized
  std::vector<double> alpha;              // in [0, C]
  std::vector<double> y;                  // +1 / -1
  double bias = 0.0;
  double c = 1.0;

  // Sum_i alpha_i y_i K(s_i, z) + b for an already standardized point z.
  double decision_standardized(FeatureView z) const;
  // Same, for a raw degC feature vector.
  double decision(FeatureView x) const;

  // Primal weights in raw-feature space; linear kernel only.
  struct Hyperplane {
    Features w{};
    double b = 0.0;
  };
  Hyperplane linear_hyperplane() const;
};

// Worst KKT violation measured on the standardized training set. Used as the
// convergence criterion and exposed for verification.
struct KktReport {
  double max_violation = 0.0;
  double dual_equality_residual = 0.0;  // |sum alpha_i y_i|
};

// Full dual solution: one multiplier per training sample, plus the model
// that keeps only the samples with alpha > 0.
struct SvmSolution {
  SvmModel model;
  std::vector<double> alpha;
  std::size_t iterations = 0;
};

// SMO with maximal-violating-pair working-set selection, run until the
// optimality gap drops below tol. Throws TrainingError after max_iterations
// pair updates, reporting the remaining violation.
SvmSolution solve_svm(const Dataset& train, const SvmParams& params);
SvmModel train_svm(const Dataset& train, const SvmParams& params);

// Recomputes the KKT conditions of a solution against its training set.
KktReport check_kkt(const SvmSolution& solution, const Dataset& train);

// f(x) = 0 maps to Person.
Label predict_svm(const SvmModel& model, FeatureView x);

}  // namespace thermal_sense::classifiers
