#include "thermal_sense/model.hpp"

#include <sstream>

#include "thermal_sense/text_io.hpp"

namespace thermal_sense::classifiers {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

TrainedModel train(const ClassifierSpec& spec, const Dataset& train) {
  return std::visit(
      Overloaded{
          [&](const KnnSpec& s) -> TrainedModel {
            return train_knn(train, s.k, s.weighting);
          },
          [&](const SvmSpec& s) -> TrainedModel {
            return train_svm(train, s.params);
          },
          [&](const NnSpec& s) -> TrainedModel {
            return train_nn(train, s.hidden, s.hyperparams, s.seed);
          },
      },
      spec);
}

Label predict(const TrainedModel& model, FeatureView x) {
  return std::visit(
      Overloaded{
          [&](const KnnModel& m) { return predict_knn(m, x); },
          [&](const SvmModel& m) { return predict_svm(m, x); },
          [&](const NnModel& m) { return predict_nn(m, x); },
      },
      model);
}

std::vector<Label> predict_all(const TrainedModel& model, const Dataset& ds) {
  std::vector<Label> out;
  out.reserve(ds.size());
  for (const auto& s : ds.samples) out.push_back(predict(model, s.features));
  return out;
}

std::string_view family_name(const ClassifierSpec& spec) {
  constexpr std::string_view names[] = {"knn", "svm", "nn"};
  return names[spec.index()];
}

std::string_view family_name(const TrainedModel& model) {
  constexpr std::string_view names[] = {"knn", "svm", "nn"};
  return names[model.index()];
}

std::string describe(const ClassifierSpec& spec) {
  std::ostringstream out;
  std::visit(
      Overloaded{
          [&](const KnnSpec& s) {
            out << "knn k=" << s.k << " weighting=" << to_string(s.weighting);
          },
          [&](const SvmSpec& s) {
            out << "svm kernel=" << to_string(s.params.kernel)
                << " C=" << io::format_shortest(s.params.c);
          },
          [&](const NnSpec& s) {
            out << "nn hidden=" << s.hidden;
          },
      },
      spec);
  return out.str();
}

}  // namespace thermal_sense::classifiers
