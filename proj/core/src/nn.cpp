#include "thermal_sense/nn.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <string>

#include "thermal_sense/errors.hpp"
#include "thermal_sense/rng.hpp"

namespace thermal_sense::classifiers {
namespace {

constexpr std::size_t kOutputs = 2;

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatrixMap = Eigen::Map<const RowMatrix>;
using MatrixMap = Eigen::Map<RowMatrix>;
using ConstVectorMap = Eigen::Map<const Eigen::VectorXd>;

struct Forward {
  RowMatrix x;       // B x 64, standardized
  RowMatrix z1;      // B x H
  RowMatrix h1;      // B x H
  RowMatrix logits;  // B x 2
  RowMatrix prob;    // B x 2
};

Forward forward(const NnModel& m, std::span<const LabeledSample> batch) {
  const auto b = static_cast<Eigen::Index>(batch.size());
  const auto h = static_cast<Eigen::Index>(m.hidden);
  Forward f;
  f.x.resize(b, static_cast<Eigen::Index>(kPixelCount));
  for (Eigen::Index r = 0; r < b; ++r) {
    const Features z = m.standardizer.apply(batch[r].features);
    for (std::size_t j = 0; j < kPixelCount; ++j) {
      f.x(r, static_cast<Eigen::Index>(j)) = z[j];
    }
  }
  ConstMatrixMap w1(m.w1.data(), h, static_cast<Eigen::Index>(kPixelCount));
  ConstVectorMap b1(m.b1.data(), h);
  ConstMatrixMap w2(m.w2.data(), static_cast<Eigen::Index>(kOutputs), h);
  ConstVectorMap b2(m.b2.data(), static_cast<Eigen::Index>(kOutputs));

  f.z1 = f.x * w1.transpose();
  f.z1.rowwise() += b1.transpose();
  f.h1 = f.z1.cwiseMax(0.0);
  f.logits = f.h1 * w2.transpose();
  f.logits.rowwise() += b2.transpose();
  f.prob.resize(b, static_cast<Eigen::Index>(kOutputs));
  for (Eigen::Index r = 0; r < b; ++r) {
    const double mx = f.logits.row(r).maxCoeff();
    const double e0 = std::exp(f.logits(r, 0) - mx);
    const double e1 = std::exp(f.logits(r, 1) - mx);
    f.prob(r, 0) = e0 / (e0 + e1);
    f.prob(r, 1) = e1 / (e0 + e1);
  }
  return f;
}

double mean_cross_entropy(const Forward& f,
                          std::span<const LabeledSample> batch) {
  double loss = 0.0;
  for (std::size_t r = 0; r < batch.size(); ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    const auto cls = static_cast<Eigen::Index>(batch[r].label);
    const double mx = f.logits.row(row).maxCoeff();
    const double lse =
        mx + std::log(std::exp(f.logits(row, 0) - mx) +
                      std::exp(f.logits(row, 1) - mx));
    loss += lse - f.logits(row, cls);
  }
  return loss / static_cast<double>(batch.size());
}

std::vector<double> backward(const NnModel& m, const Forward& f,
                             std::span<const LabeledSample> batch) {
  const auto b = static_cast<Eigen::Index>(batch.size());
  const auto h = static_cast<Eigen::Index>(m.hidden);
  const auto in = static_cast<Eigen::Index>(kPixelCount);
  const auto out = static_cast<Eigen::Index>(kOutputs);

  RowMatrix dz2 = f.prob;
  for (Eigen::Index r = 0; r < b; ++r) {
    dz2(r, static_cast<Eigen::Index>(batch[r].label)) -= 1.0;
  }
  dz2 /= static_cast<double>(b);

  ConstMatrixMap w2(m.w2.data(), out, h);
  RowMatrix dh1 = dz2 * w2;
  RowMatrix dz1 = dh1.cwiseProduct(
      (f.z1.array() > 0.0).cast<double>().matrix());

  std::vector<double> grad(m.parameter_count());
  double* p = grad.data();
  MatrixMap(p, h, in) = dz1.transpose() * f.x;
  p += h * in;
  Eigen::Map<Eigen::VectorXd>(p, h) = dz1.colwise().sum().transpose();
  p += h;
  MatrixMap(p, out, h) = dz2.transpose() * f.h1;
  p += out * h;
  Eigen::Map<Eigen::VectorXd>(p, out) = dz2.colwise().sum().transpose();
  return grad;
}

void check_batch(std::span<const LabeledSample> batch) {
  if (batch.empty()) throw InvalidInputError("batch must not be empty");
}

}  // namespace

NnModel NnModel::zeros(std::size_t hidden) {
  if (hidden < 1 || hidden > kMaxHidden) {
    throw ConfigError("hidden width must lie in [1, 1024]");
  }
  NnModel m;
  m.hidden = hidden;
  m.w1.assign(hidden * kPixelCount, 0.0);
  m.b1.assign(hidden, 0.0);
  m.w2.assign(kOutputs * hidden, 0.0);
  m.b2.assign(kOutputs, 0.0);
  return m;
}

std::size_t NnModel::parameter_count() const {
  return hidden * kPixelCount + hidden + kOutputs * hidden + kOutputs;
}

std::vector<double> NnModel::parameters() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  flat.insert(flat.end(), w1.begin(), w1.end());
  flat.insert(flat.end(), b1.begin(), b1.end());
  flat.insert(flat.end(), w2.begin(), w2.end());
  flat.insert(flat.end(), b2.begin(), b2.end());
  return flat;
}

void NnModel::set_parameters(std::span<const double> flat) {
  if (flat.size() != parameter_count()) {
    throw InvalidInputError("parameter vector has the wrong length");
  }
  auto it = flat.begin();
  auto take = [&it](std::vector<double>& dst) {
    std::copy(it, it + static_cast<long>(dst.size()), dst.begin());
    it += static_cast<long>(dst.size());
  };
  take(w1);
  take(b1);
  take(w2);
  take(b2);
}

double NnModel::probability_person(FeatureView x) const {
  LabeledSample s;
  std::copy(x.begin(), x.end(), s.features.begin());
  const Forward f = forward(*this, std::span<const LabeledSample>(&s, 1));
  return f.prob(0, 1);
}

double nn_loss(const NnModel& model, std::span<const LabeledSample> batch) {
  check_batch(batch);
  return mean_cross_entropy(forward(model, batch), batch);
}

std::vector<double> nn_gradient(const NnModel& model,
                                std::span<const LabeledSample> batch) {
  check_batch(batch);
  return backward(model, forward(model, batch), batch);
}

NnModel train_nn(const Dataset& train, std::size_t hidden,
                 const NnHyperparams& hp, std::uint64_t seed) {
  if (hidden < 1 || hidden > kMaxHidden) {
    throw ConfigError("hidden width " + std::to_string(hidden) +
                      " outside [1, 1024]");
  }
  if (hp.batch_size == 0 || !(hp.learning_rate > 0.0) || hp.epochs == 0) {
    throw ConfigError("learning rate, batch size and epochs must be positive");
  }
  if (train.empty()) throw InvalidInputError("training set is empty");

  NnModel m = NnModel::zeros(hidden);
  m.hyperparams = hp;
  m.seed = seed;
  m.standardizer = Standardizer::fit(train);

  Rng rng(seed);
  const double lim1 = std::sqrt(6.0 / static_cast<double>(kPixelCount));
  for (double& w : m.w1) w = rng.uniform(-lim1, lim1);
  const double lim2 = std::sqrt(6.0 / static_cast<double>(hidden));
  for (double& w : m.w2) w = rng.uniform(-lim2, lim2);

  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<LabeledSample> batch;
  batch.reserve(hp.batch_size);
  std::vector<double> params = m.parameters();

  for (std::size_t epoch = 0; epoch < hp.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t start = 0; start < order.size(); start += hp.batch_size) {
      const std::size_t stop = std::min(order.size(), start + hp.batch_size);
      batch.clear();
      for (std::size_t r = start; r < stop; ++r) {
        batch.push_back(train.samples[order[r]]);
      }
      const Forward f = forward(m, batch);
      const double loss = mean_cross_entropy(f, batch);
      if (!std::isfinite(loss)) {
        throw TrainingError("loss became non-finite in epoch " +
                            std::to_string(epoch));
      }
      const std::vector<double> grad = backward(m, f, batch);
      for (std::size_t k = 0; k < params.size(); ++k) {
        params[k] -= hp.learning_rate * grad[k];
      }
      m.set_parameters(params);
    }
  }
  for (double v : params) {
    if (!std::isfinite(v)) throw TrainingError("weights became non-finite");
  }
  return m;
}

Label predict_nn(const NnModel& model, FeatureView x) {
  LabeledSample s;
  std::copy(x.begin(), x.end(), s.features.begin());
  const Forward f = forward(model, std::span<const LabeledSample>(&s, 1));
  return f.logits(0, 1) > f.logits(0, 0) ? Label::Person : Label::NoPerson;
}

}  // namespace thermal_sense::classifiers
