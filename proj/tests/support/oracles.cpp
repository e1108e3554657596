#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace thermal_sense::testing {

Fraction Fraction::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

double Fraction::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

DirectMetrics direct_metrics(std::span<const Label> predicted,
                             std::span<const Label> truth) {
  std::uint64_t correct = 0;
  std::uint64_t positives = 0;
  std::uint64_t caught = 0;
  std::uint64_t negatives = 0;
  std::uint64_t rejected = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool same = predicted[i] == truth[i];
    correct += same;
    if (truth[i] == Label::Person) {
      ++positives;
      caught += same;
    } else {
      ++negatives;
      rejected += same;
    }
  }
  DirectMetrics m;
  m.accuracy = Fraction::of(correct, truth.size());
  if (positives > 0) {
    m.sensitivity_defined = true;
    m.sensitivity = Fraction::of(caught, positives);
  }
  if (negatives > 0) {
    m.specificity_defined = true;
    m.specificity = Fraction::of(rejected, negatives);
  }
  return m;
}

Label brute_force_knn(std::span<const Features> train,
                      std::span<const Label> labels, std::size_t k,
                      bool distance_weighted, const Features& x) {
  struct Neighbour {
    double squared;
    std::size_t index;
  };
  std::vector<Neighbour> all;
  for (std::size_t i = 0; i < train.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      s += (train[i][j] - x[j]) * (train[i][j] - x[j]);
    }
    all.push_back({s, i});
  }
  // Stable sort keeps the lower index first among equal distances.
  std::stable_sort(all.begin(), all.end(),
                   [](const Neighbour& a, const Neighbour& b) {
                     return a.squared < b.squared;
                   });
  all.resize(std::min(k, all.size()));

  double person = 0.0;
  double nobody = 0.0;
  const bool exact = std::any_of(all.begin(), all.end(), [](const Neighbour& n) {
    return n.squared == 0.0;
  });
  for (const auto& n : all) {
    double w = 1.0;
    if (distance_weighted) {
      if (exact) {
        if (n.squared != 0.0) continue;
      } else {
        w = 1.0 / std::sqrt(n.squared);
      }
    }
    if (labels[n.index] == Label::Person) {
      person += w;
    } else {
      nobody += w;
    }
  }
  return person > nobody ? Label::Person : Label::NoPerson;
}

double kkt_violation(std::span<const double> alpha, std::span<const double> y,
                     std::span<const double> decision, double c) {
  double worst = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double margin = y[i] * decision[i];
    double v = 0.0;
    if (alpha[i] <= 0.0) {
      v = std::max(0.0, 1.0 - margin);
    } else if (alpha[i] >= c) {
      v = std::max(0.0, margin - 1.0);
    } else {
      v = std::abs(margin - 1.0);
    }
    worst = std::max(worst, v);
  }
  return worst;
}

long double reference_nn_loss(std::span<const double> params, std::size_t hidden,
                              std::span<const Features> inputs,
                              std::span<const Label> labels) {
  const std::size_t in = kPixelCount;
  const double* w1 = params.data();
  const double* b1 = w1 + hidden * in;
  const double* w2 = b1 + hidden;
  const double* b2 = w2 + 2 * hidden;
  long double total = 0.0L;
  std::vector<long double> act(hidden);
  for (std::size_t r = 0; r < inputs.size(); ++r) {
    for (std::size_t h = 0; h < hidden; ++h) {
      long double z = b1[h];
      for (std::size_t i = 0; i < in; ++i) {
        z += static_cast<long double>(w1[h * in + i]) * inputs[r][i];
      }
      act[h] = z > 0.0L ? z : 0.0L;
    }
    long double logit[2];
    for (std::size_t o = 0; o < 2; ++o) {
      logit[o] = b2[o];
      for (std::size_t h = 0; h < hidden; ++h) {
        logit[o] += static_cast<long double>(w2[o * hidden + h]) * act[h];
      }
    }
    const long double mx = std::max(logit[0], logit[1]);
    const long double lse =
        mx + std::log(std::exp(logit[0] - mx) + std::exp(logit[1] - mx));
    total += lse - logit[labels[r] == Label::Person ? 1 : 0];
  }
  return total / static_cast<long double>(inputs.size());
}

std::vector<double> reference_nn_gradient(std::vector<double> params,
                                          std::size_t hidden,
                                          std::span<const Features> inputs,
                                          std::span<const Label> labels,
                                          double h) {
  std::vector<double> grad(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double saved = params[i];
    params[i] = saved + h;
    const long double up = reference_nn_loss(params, hidden, inputs, labels);
    params[i] = saved - h;
    const long double down = reference_nn_loss(params, hidden, inputs, labels);
    params[i] = saved;
    // The perturbed parameters are exact doubles, so divide by their actual
    // separation rather than 2h.
    const long double step = static_cast<long double>(saved + h) -
                             static_cast<long double>(saved - h);
    grad[i] = static_cast<double>((up - down) / step);
  }
  return grad;
}

double max_relative_error(std::span<const double> analytic,
                          std::span<const double> numeric, double floor) {
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    const double diff = std::abs(analytic[i] - numeric[i]);
    if (diff == 0.0) continue;
    const double scale =
        std::max({std::abs(analytic[i]), std::abs(numeric[i]), floor});
    worst = std::max(worst, diff / scale);
  }
  return worst;
}

}  // namespace thermal_sense::testing
