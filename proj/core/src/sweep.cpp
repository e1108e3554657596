#include "thermal_sense/sweep.hpp"

#include "thermal_sense/parallel.hpp"

namespace thermal_sense::eval {

using classifiers::ClassifierSpec;

std::string_view to_string(SweepFamily family) {
  switch (family) {
    case SweepFamily::SvmKernels: return "svm-kernels";
    case SweepFamily::KnnGrid: return "knn-grid";
    case SweepFamily::NnWidths: return "nn-widths";
  }
  return "unknown";
}

std::optional<SweepFamily> parse_family(std::string_view text) {
  for (auto f : {SweepFamily::SvmKernels, SweepFamily::KnnGrid,
                 SweepFamily::NnWidths}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

std::vector<ClassifierSpec> sweep_grid(SweepFamily family,
                                       const classifiers::NnSpec& nn_template) {
  std::vector<ClassifierSpec> grid;
  switch (family) {
    case SweepFamily::SvmKernels:
      for (auto k : {classifiers::KernelKind::Linear,
                     classifiers::KernelKind::Polynomial,
                     classifiers::KernelKind::Rbf,
                     classifiers::KernelKind::Sigmoid}) {
        classifiers::SvmSpec s;
        s.params.kernel = k;
        grid.emplace_back(s);
      }
      break;
    case SweepFamily::KnnGrid:
      for (std::size_t k : {1, 3, 5, 7}) {
        for (auto w : {classifiers::Weighting::Uniform,
                       classifiers::Weighting::Distance}) {
          grid.emplace_back(classifiers::KnnSpec{k, w});
        }
      }
      break;
    case SweepFamily::NnWidths:
      for (std::size_t h = 1; h <= classifiers::kMaxHidden; h *= 2) {
        classifiers::NnSpec s = nn_template;
        s.hidden = h;
        grid.emplace_back(s);
      }
      break;
  }
  return grid;
}

std::vector<SweepRow> sweep(const Dataset& ds, const FoldPlan& plan,
                            SweepFamily family,
                            const classifiers::NnSpec& nn_template,
                            std::size_t threads) {
  const auto grid = sweep_grid(family, nn_template);
  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    rows[i].config = classifiers::describe(grid[i]);
    rows[i].spec = grid[i];
    rows[i].result = cross_validate(ds, plan, grid[i]);
  });
  return rows;
}

}  // namespace thermal_sense::eval
