#include "cli.hpp"

#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "thermal_sense/condition_eval.hpp"
#include "thermal_sense/cross_validation.hpp"
#include "thermal_sense/dataset_io.hpp"
#include "thermal_sense/errors.hpp"
#include "thermal_sense/fold_io.hpp"
#include "thermal_sense/model_io.hpp"
#include "thermal_sense/monitor_io.hpp"
#include "thermal_sense/parallel.hpp"
#include "thermal_sense/report_io.hpp"
#include "thermal_sense/simulator.hpp"
#include "thermal_sense/split.hpp"
#include "thermal_sense/sweep.hpp"
#include "thermal_sense/text_io.hpp"

namespace thermal_sense::cli {
namespace {

namespace fs = std::filesystem;
using classifiers::ClassifierSpec;

struct ClassifierOptions {
  std::string family;
  std::size_t k = 1;
  std::string weighting = "uniform";
  std::string kernel = "linear";
  double c = 1.0;
  std::optional<double> gamma;
  int degree = 3;
  double coef0 = 0.0;
  double tol = 1e-3;
  std::size_t hidden = 128;
  double learning_rate = 0.01;
  std::size_t batch = 32;
  std::size_t epochs = 500;
};

void add_nn_options(CLI::App* app, ClassifierOptions& o) {
  app->add_option("--hidden", o.hidden, "NN hidden width (1..1024)")
      ->capture_default_str();
  app->add_option("--lr", o.learning_rate, "NN learning rate")
      ->capture_default_str();
  app->add_option("--batch", o.batch, "NN mini-batch size")
      ->capture_default_str();
  app->add_option("--epochs", o.epochs, "NN training epochs")
      ->capture_default_str();
}

void add_classifier_options(CLI::App* app, ClassifierOptions& o) {
  app->add_option("--model", o.family, "Classifier family")
      ->required()
      ->check(CLI::IsMember({"knn", "svm", "nn"}));
  app->add_option("--k", o.k, "k-NN neighbours")->capture_default_str();
  app->add_option("--weighting", o.weighting, "k-NN vote weighting")
      ->check(CLI::IsMember({"uniform", "distance"}))
      ->capture_default_str();
  app->add_option("--kernel", o.kernel, "SVM kernel")
      ->check(CLI::IsMember({"linear", "polynomial", "poly", "rbf", "sigmoid"}))
      ->capture_default_str();
  app->add_option("--C", o.c, "SVM regularization")->capture_default_str();
  app->add_option("--gamma", o.gamma,
                  "SVM kernel gamma (default 1/(64 var(features)))");
  app->add_option("--degree", o.degree, "Polynomial degree")
      ->capture_default_str();
  app->add_option("--coef0", o.coef0, "Polynomial/sigmoid offset")
      ->capture_default_str();
  app->add_option("--tol", o.tol, "SMO KKT tolerance")->capture_default_str();
  add_nn_options(app, o);
}

ClassifierSpec make_spec(const ClassifierOptions& o, std::uint64_t seed) {
  if (o.family == "knn") {
    return classifiers::KnnSpec{o.k, *classifiers::parse_weighting(o.weighting)};
  }
  if (o.family == "svm") {
    classifiers::SvmSpec s;
    s.params.kernel = *classifiers::parse_kernel(o.kernel);
    s.params.c = o.c;
    s.params.gamma = o.gamma;
    s.params.degree = o.degree;
    s.params.coef0 = o.coef0;
    s.params.tol = o.tol;
    return s;
  }
  classifiers::NnSpec s;
  s.hidden = o.hidden;
  s.hyperparams = {o.learning_rate, o.batch, o.epochs};
  s.seed = seed;
  return s;
}

using Config = std::vector<std::pair<std::string, std::string>>;

template <typename T>
std::string str(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return io::format_shortest(v);
  } else if constexpr (std::is_convertible_v<T, std::string>) {
    return std::string(v);
  } else {
    return std::to_string(v);
  }
}

void append_classifier_config(Config& cfg, const ClassifierOptions& o) {
  cfg.emplace_back("model", o.family);
  if (o.family == "knn") {
    cfg.emplace_back("k", str(o.k));
    cfg.emplace_back("weighting", o.weighting);
  } else if (o.family == "svm") {
    cfg.emplace_back("kernel", std::string(to_string(
                                   *classifiers::parse_kernel(o.kernel))));
    cfg.emplace_back("C", str(o.c));
    cfg.emplace_back("gamma", o.gamma ? str(*o.gamma) : "auto");
    cfg.emplace_back("degree", str(o.degree));
    cfg.emplace_back("coef0", str(o.coef0));
    cfg.emplace_back("tol", str(o.tol));
  } else {
    cfg.emplace_back("hidden", str(o.hidden));
    cfg.emplace_back("lr", str(o.learning_rate));
    cfg.emplace_back("batch", str(o.batch));
    cfg.emplace_back("epochs", str(o.epochs));
  }
}

io::RunReport new_report(std::string command, Config config) {
  io::RunReport r;
  r.tool_version = io::tool_version();
  r.command = std::move(command);
  r.config = std::move(config);
  return r;
}

void emit_report(const io::RunReport& report, const std::string& path,
                 std::ostream& out) {
  out << io::render_text(report);
  if (!path.empty()) io::save_report(report, path);
}

void write_plot_file(const fs::path& dir, const std::string& name,
                     const std::string& content) {
  fs::create_directories(dir);
  io::write_file_atomic(dir / name, content);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bed-occupancy classification from 8x8 thermopile frames",
               "thermal-sense"};
  app.require_subcommand(1);
  app.set_version_flag("--version", io::tool_version());

  // simulate
  std::string sim_kind, sim_out, sim_params, sim_report;
  std::size_t n_per_class = 240, n_per_cell = 30;
  std::uint64_t seed = 0;
  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic dataset");
  simulate->add_option("kind", sim_kind, "main or variational")
      ->required()
      ->check(CLI::IsMember({"main", "variational"}));
  simulate->add_option("--n-per-class", n_per_class,
                       "Frames per class (main)")
      ->capture_default_str();
  simulate->add_option("--n-per-cell", n_per_cell,
                       "Frames per class and condition (variational)")
      ->capture_default_str();
  simulate->add_option("--seed", seed, "Random seed")->required();
  simulate->add_option("--out", sim_out, "Output CSV")->required();
  simulate->add_option("--params", sim_params, "Simulator key=value file")
      ->check(CLI::ExistingFile);
  simulate->add_option("--report", sim_report, "Write a JSON run report");

  // split
  std::string data_path, train_out, test_out;
  double test_fraction = 0.2;
  auto* split = app.add_subcommand("split", "Stratified train/test split");
  split->add_option("--data", data_path, "Dataset CSV")->required();
  split->add_option("--test-fraction", test_fraction, "Fraction held out")
      ->capture_default_str();
  split->add_option("--seed", seed, "Random seed")->required();
  split->add_option("--train-out", train_out, "Training CSV")->required();
  split->add_option("--test-out", test_out, "Test CSV")->required();

  // cv
  ClassifierOptions clf;
  std::size_t folds = 10;
  std::string report_path, folds_out;
  auto* cv = app.add_subcommand("cv", "Stratified k-fold cross-validation");
  cv->add_option("--data", data_path, "Dataset CSV")->required();
  cv->add_option("--folds", folds, "Number of folds")->capture_default_str();
  cv->add_option("--seed", seed, "Fold and training seed")->required();
  add_classifier_options(cv, clf);
  cv->add_option("--report", report_path, "Write a JSON run report");
  cv->add_option("--folds-out", folds_out, "Write the fold plan");

  // sweep
  std::string family_name, plot_dir;
  auto* sweep = app.add_subcommand("sweep", "Cross-validate a hyperparameter grid");
  sweep->add_option("--data", data_path, "Dataset CSV")->required();
  sweep->add_option("--folds", folds, "Number of folds")->capture_default_str();
  sweep->add_option("--seed", seed, "Fold and training seed")->required();
  sweep->add_option("--family", family_name, "Grid to sweep")
      ->required()
      ->check(CLI::IsMember({"svm-kernels", "knn-grid", "nn-widths"}));
  add_nn_options(sweep, clf);
  sweep->add_option("--report", report_path, "Write a JSON run report");
  sweep->add_option("--emit-plot-data", plot_dir,
                    "Directory for per-figure CSV tables");

  // train
  std::string model_out;
  auto* train = app.add_subcommand("train", "Train a classifier on a dataset");
  train->add_option("--data", data_path, "Dataset CSV")->required();
  train->add_option("--seed", seed, "Training seed")->required();
  add_classifier_options(train, clf);
  train->add_option("--out", model_out, "Model file")->required();

  // eval
  std::vector<std::string> model_paths;
  bool by_condition = false;
  auto* evaluate = app.add_subcommand("eval", "Evaluate saved models");
  evaluate->add_option("--model", model_paths, "Model file (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--data", data_path, "Dataset CSV")->required();
  evaluate->add_flag("--by-condition", by_condition,
                     "Also report every condition subset");
  evaluate->add_option("--report", report_path, "Write a JSON run report");
  evaluate->add_option("--emit-plot-data", plot_dir,
                       "Directory for per-figure CSV tables");

  // predict
  std::string predict_model, predict_out;
  auto* predict = app.add_subcommand("predict", "Label every frame of a dataset");
  predict->add_option("--model", predict_model, "Model file")
      ->required()
      ->check(CLI::ExistingFile);
  predict->add_option("--data", data_path, "Dataset CSV")->required();
  predict->add_option("--out", predict_out, "Predictions CSV (default stdout)");

  // monitor
  std::string replay_path, events_out, bed_id = "bed0";
  monitor::MonitorConfig mon;
  auto* mon_cmd = app.add_subcommand("monitor", "Replay a label trace through the bed monitor");
  mon_cmd->add_option("--replay", replay_path, "CSV of timestamp,label")
      ->required()
      ->check(CLI::ExistingFile);
  mon_cmd->add_option("--out", events_out, "Events CSV (default stdout)");
  mon_cmd->add_option("--bed-id", bed_id, "Bed identifier")->capture_default_str();
  mon_cmd->add_option("--debounce", mon.debounce_frames, "Frames to confirm a change")
      ->capture_default_str();
  mon_cmd->add_option("--long-absence", mon.long_absence, "Seconds before a bed-exit alert")
      ->capture_default_str();
  mon_cmd->add_option("--window", mon.window, "Seconds of exit history")
      ->capture_default_str();
  mon_cmd->add_option("--max-exits", mon.max_exits, "Exits tolerated per window")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << io::tool_version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kUsage;
  }

  const std::size_t threads = thread_limit_from_env();
  try {
    if (simulate->parsed()) {
      sim::SimulatorParams params;
      if (!sim_params.empty()) params = sim::load_params(sim_params);
      const Dataset ds = sim_kind == "main"
                             ? sim::generate_main(n_per_class, seed, params)
                             : sim::generate_variational(n_per_cell, seed, params);
      io::save_dataset(ds, sim_out);
      Config cfg = {{"kind", sim_kind},
                    {sim_kind == "main" ? "n-per-class" : "n-per-cell",
                     str(sim_kind == "main" ? n_per_class : n_per_cell)},
                    {"seed", str(seed)},
                    {"out", sim_out}};
      std::istringstream lines(sim::format_params(params));
      for (std::string line; std::getline(lines, line);) {
        const auto eq = line.find('=');
        cfg.emplace_back("sim." + line.substr(0, eq), line.substr(eq + 1));
      }
      auto report = new_report("simulate", std::move(cfg));
      out << "wrote " << ds.size() << " samples (" << ds.count(Label::Person)
          << " person, " << ds.count(Label::NoPerson) << " no_person) to "
          << sim_out << "\n";
      if (!sim_report.empty()) io::save_report(report, sim_report);
      return kOk;
    }

    if (split->parsed()) {
      const Dataset ds = io::load_dataset(data_path);
      auto [tr, te] = split_train_test(ds, test_fraction, seed);
      io::save_dataset(tr, train_out);
      io::save_dataset(te, test_out);
      out << "train: " << tr.size() << " samples, test: " << te.size()
          << " samples\n";
      return kOk;
    }

    if (cv->parsed()) {
      const Dataset ds = io::load_dataset(data_path);
      const FoldPlan plan = make_folds(ds, folds, seed);
      if (!folds_out.empty()) io::save_fold_plan(plan, folds_out);
      const auto spec = make_spec(clf, seed);
      const auto result = eval::cross_validate(ds, plan, spec, threads);
      Config cfg = {{"data", data_path}, {"folds", str(folds)}, {"seed", str(seed)}};
      append_classifier_config(cfg, clf);
      auto report = new_report("cv", std::move(cfg));
      report.cv = io::CvSummary::from(result);
      report.metrics = eval::MetricsReport::from_counts(result.pooled);
      emit_report(report, report_path, out);
      return kOk;
    }

    if (sweep->parsed()) {
      const Dataset ds = io::load_dataset(data_path);
      // Every row shares this plan.
      const FoldPlan plan = make_folds(ds, folds, seed);
      const auto family = *eval::parse_family(family_name);
      classifiers::NnSpec nn;
      nn.hyperparams = {clf.learning_rate, clf.batch, clf.epochs};
      nn.seed = seed;
      const auto rows = eval::sweep(ds, plan, family, nn, threads);
      Config cfg = {{"data", data_path},
                    {"folds", str(folds)},
                    {"seed", str(seed)},
                    {"family", family_name}};
      if (family == eval::SweepFamily::NnWidths) {
        cfg.emplace_back("lr", str(clf.learning_rate));
        cfg.emplace_back("batch", str(clf.batch));
        cfg.emplace_back("epochs", str(clf.epochs));
      }
      auto report = new_report("sweep", std::move(cfg));
      for (const auto& row : rows) {
        report.sweep.push_back({row.config, io::CvSummary::from(row.result)});
      }
      emit_report(report, report_path, out);
      if (!plot_dir.empty()) {
        write_plot_file(plot_dir, "accuracy_sweep_" + family_name + ".csv",
                        io::sweep_plot_csv(family_name, report.sweep));
      }
      return kOk;
    }

    if (train->parsed()) {
      const Dataset ds = io::load_dataset(data_path);
      const auto model = classifiers::train(make_spec(clf, seed), ds);
      io::save_model(model, model_out);
      out << "trained " << classifiers::describe(make_spec(clf, seed))
          << " on " << ds.size() << " samples -> " << model_out << "\n";
      return kOk;
    }

    if (evaluate->parsed()) {
      const Dataset ds = io::load_dataset(data_path);
      Config cfg = {{"data", data_path},
                    {"by-condition", by_condition ? "true" : "false"}};
      for (std::size_t i = 0; i < model_paths.size(); ++i) {
        cfg.emplace_back("model." + std::to_string(i + 1), model_paths[i]);
      }
      auto report = new_report("eval", std::move(cfg));
      for (const auto& p : model_paths) {
        const auto model = io::load_model(p);
        auto cond = eval::evaluate_by_condition(model, ds);
        if (!by_condition) cond.by_condition.clear();
        report.evaluations.push_back({fs::path(p).stem().string(), cond});
      }
      if (report.evaluations.size() == 1) {
        report.metrics = report.evaluations.front().report.overall;
      }
      emit_report(report, report_path, out);
      if (!plot_dir.empty()) {
        write_plot_file(plot_dir, "overall_metrics.csv",
                        io::overall_plot_csv(report.evaluations));
        if (by_condition) {
          write_plot_file(plot_dir, "condition_metrics.csv",
                          io::condition_plot_csv(report.evaluations));
        }
      }
      return kOk;
    }

    if (predict->parsed()) {
      const Dataset ds = io::load_dataset(data_path);
      const auto model = io::load_model(predict_model);
      std::string csv = "index,predicted,truth,condition\n";
      const auto labels = classifiers::predict_all(model, ds);
      for (std::size_t i = 0; i < ds.size(); ++i) {
        csv += std::to_string(i) + "," + std::string(to_string(labels[i])) +
               "," + std::string(to_string(ds.samples[i].label)) + "," +
               std::string(to_string(ds.samples[i].condition)) + "\n";
      }
      if (predict_out.empty()) {
        out << csv;
      } else {
        io::write_file_atomic(predict_out, csv);
      }
      return kOk;
    }

    if (mon_cmd->parsed()) {
      mon.validate();
      const auto trace = io::parse_trace(io::read_file(replay_path));
      const auto events = monitor::replay(trace, mon);
      const auto csv = io::format_events(events, bed_id);
      if (events_out.empty()) {
        out << csv;
      } else {
        io::write_file_atomic(events_out, csv);
      }
      return kOk;
    }
  } catch (const TrainingError& e) {
    err << "training failed: " << e.what() << "\n";
    return kTrainingFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}

}  // namespace thermal_sense::cli
