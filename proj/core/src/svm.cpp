#include "thermal_sense/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/text_io.hpp"

namespace thermal_sense::classifiers {
namespace {

constexpr double kTau = 1e-12;  // floor for a non-positive curvature

double label_sign(Label l) { return l == Label::Person ? 1.0 : -1.0; }

// 1 / (64 * variance over every standardized training value).
double default_gamma(const std::vector<Features>& z) {
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& row : z) {
    for (double v : row) {
      sum += v;
      sum_sq += v * v;
    }
  }
  const double n = static_cast<double>(z.size() * kPixelCount);
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  return var > 0.0 ? 1.0 / (static_cast<double>(kPixelCount) * var) : 1.0;
}

double kkt_violation(double alpha, double c, double margin) {
  // margin = y_i f(x_i)
  if (alpha <= 0.0) return std::max(0.0, 1.0 - margin);
  if (alpha >= c) return std::max(0.0, margin - 1.0);
  return std::abs(margin - 1.0);
}

}  // namespace

double SvmModel::decision_standardized(FeatureView z) const {
  double f = bias;
  for (std::size_t i = 0; i < support_vectors.size(); ++i) {
    f += alpha[i] * y[i] * kernel_eval(kernel, support_vectors[i], z);
  }
  return f;
}

double SvmModel::decision(FeatureView x) const {
  const Features z = standardizer.apply(x);
  return decision_standardized(z);
}

SvmModel::Hyperplane SvmModel::linear_hyperplane() const {
  if (kernel.kind != KernelKind::Linear) {
    throw InvalidInputError("primal weights exist only for the linear kernel");
  }
  Hyperplane h;
  Features w_std{};
  for (std::size_t i = 0; i < support_vectors.size(); ++i) {
    for (std::size_t j = 0; j < kPixelCount; ++j) {
      w_std[j] += alpha[i] * y[i] * support_vectors[i][j];
    }
  }
  h.b = bias;
  for (std::size_t j = 0; j < kPixelCount; ++j) {
    h.w[j] = w_std[j] / standardizer.scale[j];
    h.b -= h.w[j] * standardizer.mean[j];
  }
  return h;
}

SvmSolution solve_svm(const Dataset& train, const SvmParams& params) {
  if (!(params.c > 0.0) || !std::isfinite(params.c)) {
    throw ConfigError("C must be a positive number");
  }
  if (!(params.tol > 0.0)) throw ConfigError("tol must be positive");
  if (train.count(Label::Person) == 0 || train.count(Label::NoPerson) == 0) {
    throw InvalidInputError("SVM training needs both classes");
  }

  const std::size_t n = train.size();
  const double c = params.c;
  SvmSolution sol;
  SvmModel& model = sol.model;
  model.c = c;
  model.standardizer = Standardizer::fit(train);

  std::vector<Features> z(n);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = model.standardizer.apply(train.samples[i].features);
    y[i] = label_sign(train.samples[i].label);
  }

  model.kernel.kind = params.kernel;
  model.kernel.degree = params.degree;
  model.kernel.coef0 = params.coef0;
  model.kernel.gamma = params.gamma.value_or(default_gamma(z));
  model.kernel.validate();

  // Q_ij = y_i y_j K(z_i, z_j), kept whole: training sets here are small.
  std::vector<double> q(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = y[i] * y[j] * kernel_eval(model.kernel, z[i], z[j]);
      q[i * n + j] = v;
      q[j * n + i] = v;
    }
  }

  std::vector<double>& a = sol.alpha;
  a.assign(n, 0.0);
  std::vector<double> g(n, -1.0);  // gradient of 1/2 a'Qa - e'a

  auto in_up = [&](std::size_t t) {
    return (y[t] > 0 && a[t] < c) || (y[t] < 0 && a[t] > 0);
  };
  auto in_low = [&](std::size_t t) {
    return (y[t] > 0 && a[t] > 0) || (y[t] < 0 && a[t] < c);
  };

  double gap = std::numeric_limits<double>::infinity();
  double m_up = 0.0, m_low = 0.0;
  std::size_t iter = 0;
  for (;; ++iter) {
    // Maximal violating pair.
    std::size_t i = n, j = n;
    m_up = -std::numeric_limits<double>::infinity();
    m_low = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * g[t];
      if (in_up(t) && v > m_up) {
        m_up = v;
        i = t;
      }
      if (in_low(t) && v < m_low) {
        m_low = v;
        j = t;
      }
    }
    gap = m_up - m_low;
    if (i == n || j == n || gap < params.tol) break;
    if (iter >= params.max_iterations) {
      throw TrainingError("SMO did not converge in " +
                          std::to_string(params.max_iterations) +
                          " iterations; max KKT violation " +
                          io::format_shortest(gap));
    }

    const double* qi = &q[i * n];
    const double* qj = &q[j * n];
    const double old_ai = a[i], old_aj = a[j];
    if (y[i] != y[j]) {
      double quad = qi[i] + qj[j] + 2.0 * qi[j];
      if (quad <= 0.0) quad = kTau;
      const double delta = (-g[i] - g[j]) / quad;
      const double diff = a[i] - a[j];
      a[i] += delta;
      a[j] += delta;
      if (diff > 0) {
        if (a[j] < 0) { a[j] = 0; a[i] = diff; }
      } else {
        if (a[i] < 0) { a[i] = 0; a[j] = -diff; }
      }
      if (diff > 0) {
        if (a[i] > c) { a[i] = c; a[j] = c - diff; }
      } else {
        if (a[j] > c) { a[j] = c; a[i] = c + diff; }
      }
    } else {
      double quad = qi[i] + qj[j] - 2.0 * qi[j];
      if (quad <= 0.0) quad = kTau;
      const double delta = (g[i] - g[j]) / quad;
      const double sum = a[i] + a[j];
      a[i] -= delta;
      a[j] += delta;
      if (sum > c) {
        if (a[i] > c) { a[i] = c; a[j] = sum - c; }
      } else {
        if (a[j] < 0) { a[j] = 0; a[i] = sum; }
      }
      if (sum > c) {
        if (a[j] > c) { a[j] = c; a[i] = sum - c; }
      } else {
        if (a[i] < 0) { a[i] = 0; a[j] = sum; }
      }
    }
    const double dai = a[i] - old_ai, daj = a[j] - old_aj;
    for (std::size_t t = 0; t < n; ++t) {
      g[t] += q[t * n + i] * dai + q[t * n + j] * daj;
    }
  }
  sol.iterations = iter;

  // b sits inside [m_low, m_up]: the mean over free vectors when any exist.
  double free_sum = 0.0;
  std::size_t free_count = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (a[t] > 0.0 && a[t] < c) {
      free_sum += -y[t] * g[t];
      ++free_count;
    }
  }
  model.bias = free_count > 0 ? free_sum / static_cast<double>(free_count)
                              : 0.5 * (m_up + m_low);

  for (std::size_t t = 0; t < n; ++t) {
    if (a[t] > 0.0) {
      model.support_vectors.push_back(z[t]);
      model.alpha.push_back(a[t]);
      model.y.push_back(y[t]);
    }
  }
  return sol;
}

SvmModel train_svm(const Dataset& train, const SvmParams& params) {
  return solve_svm(train, params).model;
}

KktReport check_kkt(const SvmSolution& solution, const Dataset& train) {
  if (solution.alpha.size() != train.size()) {
    throw InvalidInputError("solution does not match the training set");
  }
  const SvmModel& m = solution.model;
  KktReport report;
  double eq = 0.0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const double yi = label_sign(train.samples[i].label);
    const double a = solution.alpha[i];
    eq += a * yi;
    const double margin = yi * m.decision(train.samples[i].features);
    report.max_violation =
        std::max(report.max_violation, kkt_violation(a, m.c, margin));
  }
  report.dual_equality_residual = std::abs(eq);
  return report;
}

Label predict_svm(const SvmModel& model, FeatureView x) {
  return model.decision(x) >= 0.0 ? Label::Person : Label::NoPerson;
}

}  // namespace thermal_sense::classifiers
