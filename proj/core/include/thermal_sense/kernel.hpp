#pragma once

#include <span>
#include <string_view>
#include <optional>

namespace thermal_sense::classifiers {

enum class KernelKind { Linear, Polynomial, Rbf, Sigmoid };

std::string_view to_string(KernelKind kind);
std::optional<KernelKind> parse_kernel(std::string_view text);

struct KernelSpec {
  KernelKind kind = KernelKind::Linear;
  int degree = 3;
  double gamma = 1.0;
  double coef0 = 0.0;

  // Throws ConfigError (e.g. non-positive gamma for RBF, degree < 1).
  void validate() const;

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

// Linear: x.y; Polynomial: (gamma x.y + coef0)^degree;
// Rbf: exp(-gamma |x - y|^2); Sigmoid: tanh(gamma x.y + coef0).
// Throws InvalidInputError if the lengths differ.
double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y);

}  // namespace thermal_sense::classifiers
