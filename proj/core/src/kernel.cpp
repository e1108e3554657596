#include "thermal_sense/kernel.hpp"

#include <cmath>
#include <string>

#include "thermal_sense/errors.hpp"

namespace thermal_sense::classifiers {

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::Linear: return "linear";
    case KernelKind::Polynomial: return "polynomial";
    case KernelKind::Rbf: return "rbf";
    case KernelKind::Sigmoid: return "sigmoid";
  }
  return "unknown";
}

std::optional<KernelKind> parse_kernel(std::string_view text) {
  for (auto k : {KernelKind::Linear, KernelKind::Polynomial, KernelKind::Rbf,
                 KernelKind::Sigmoid}) {
    if (to_string(k) == text) return k;
  }
  if (text == "poly") return KernelKind::Polynomial;
  return std::nullopt;
}

void KernelSpec::validate() const {
  if (kind == KernelKind::Rbf && !(gamma > 0.0)) {
    throw ConfigError("rbf kernel needs gamma > 0");
  }
  if (kind == KernelKind::Polynomial && degree < 1) {
    throw ConfigError("polynomial kernel needs degree >= 1");
  }
  if (!std::isfinite(gamma) || !std::isfinite(coef0)) {
    throw ConfigError("kernel parameters must be finite");
  }
}

double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InvalidInputError("kernel arguments differ in length (" +
                            std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()) + ")");
  }
  if (spec.kind == KernelKind::Rbf) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - y[i];
      d2 += d * d;
    }
    return std::exp(-spec.gamma * d2);
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
  switch (spec.kind) {
    case KernelKind::Linear: return dot;
    case KernelKind::Polynomial:
      return std::pow(spec.gamma * dot + spec.coef0, spec.degree);
    case KernelKind::Sigmoid: return std::tanh(spec.gamma * dot + spec.coef0);
    case KernelKind::Rbf: break;
  }
  return 0.0;
}

}  // namespace thermal_sense::classifiers
