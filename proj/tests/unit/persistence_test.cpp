#include <gtest/gtest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "thermal_sense/dataset_io.hpp"
#include "thermal_sense/errors.hpp"
#include "thermal_sense/fold_io.hpp"
#include "thermal_sense/model_io.hpp"
#include "thermal_sense/monitor_io.hpp"
#include "thermal_sense/report_io.hpp"
#include "thermal_sense/simulator.hpp"
#include "thermal_sense/split.hpp"
#include "thermal_sense/text_io.hpp"

namespace thermal_sense::io {
namespace {

namespace fs = std::filesystem;
using classifiers::TrainedModel;

Dataset small_dataset() { return sim::generate_variational(3, 5); }

std::string replace_line(const std::string& text, std::size_t line_no,
                         const std::string& replacement) {
  std::string out;
  std::size_t line = 1, pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    out += line == line_no ? replacement : text.substr(pos, end - pos);
    out += '\n';
    pos = end + 1;
    ++line;
  }
  return out;
}

// ---- text primitives -------------------------------------------------------

TEST(TextIo, ShortestRoundTripDecimals) {
  EXPECT_EQ(format_shortest(0.1), "0.1");
  EXPECT_EQ(format_shortest(1.0), "1");
  EXPECT_EQ(format_shortest(-2.5e-9), "-2.5e-09");
  for (double v : {0.1 + 0.2, 1.0 / 3.0, 6.02214076e23, -1e-300}) {
    EXPECT_EQ(parse_double(format_shortest(v), 1, "v"), v);
  }
  EXPECT_EQ(format_fixed2(22.25), "22.25");
  EXPECT_EQ(format_fixed2(100.0), "100.00");
}

TEST(TextIo, StrictNumberParsing) {
  EXPECT_THROW(parse_double("+1", 3, "x"), FormatError);
  EXPECT_THROW(parse_double(" 1", 3, "x"), FormatError);
  EXPECT_THROW(parse_double("1.0abc", 3, "x"), FormatError);
  EXPECT_THROW(parse_double("", 3, "x"), FormatError);
  EXPECT_THROW(parse_int("1.5", 3, "x"), FormatError);
  try {
    parse_double("nope", 12, "p34");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 12u);
    EXPECT_EQ(e.field(), "p34");
  }
}

TEST(TextIo, LinesNeedLfTermination) {
  EXPECT_EQ(split_lines("a\nb\n").size(), 2u);
  EXPECT_THROW(split_lines("a\r\nb\n"), FormatError);
  EXPECT_THROW(split_lines("a\nb"), FormatError);
}

TEST(TextIo, AtomicWriteLeavesNoTemporary) {
  testing::TempDir dir("atomic");
  const auto path = dir.path() / "out.txt";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  EXPECT_EQ(read_file(path), "second\n");
  EXPECT_FALSE(fs::exists(dir.path() / "out.txt.tmp"));
  EXPECT_THROW(read_file(dir.path() / "missing"), Error);
}

// ---- datasets --------------------------------------------------------------

TEST(DatasetIo, HeaderLayout) {
  const std::string h = dataset_header();
  EXPECT_EQ(h.substr(0, 8), "p00,p01,");
  EXPECT_EQ(h.substr(h.size() - 23), "p76,p77,label,condition");
}

TEST(DatasetIo, TextRoundTripIsByteIdentical) {
  const Dataset ds = small_dataset();
  const std::string text = format_dataset(ds);
  const Dataset back = parse_dataset(text, ds.name);
  EXPECT_EQ(back, ds);
  EXPECT_EQ(format_dataset(back), text);
}

TEST(DatasetIo, FileNameBecomesDatasetName) {
  testing::TempDir dir("dataset");
  const Dataset ds = small_dataset();
  save_dataset(ds, dir.path() / "night3.csv");
  const Dataset back = load_dataset(dir.path() / "night3.csv");
  EXPECT_EQ(back.name, "night3");
  EXPECT_EQ(back.samples, ds.samples);
}

TEST(DatasetIo, TruncatedRowCitesItsLine) {
  const Dataset ds = small_dataset();
  const std::string text = format_dataset(ds);
  // Drop the first pixel of row 3 (line 4): 63 temperatures remain.
  std::string row = format_dataset({"x", {ds.samples[2]}});
  row = row.substr(row.find('\n') + 1);
  row.pop_back();
  row = row.substr(row.find(',') + 1);
  try {
    parse_dataset(replace_line(text, 4, row), "x");
    FAIL() << "truncated row accepted";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.field(), "row");
  }
}

TEST(DatasetIo, RejectsNonCanonicalValues) {
  const Dataset ds = small_dataset();
  const std::string text = format_dataset(ds);
  std::string row = format_dataset({"x", {ds.samples[0]}});
  row = row.substr(row.find('\n') + 1);
  row.pop_back();
  const std::string tail = row.substr(row.find(','));
  EXPECT_THROW(parse_dataset(replace_line(text, 2, "22.3" + tail), "x"), FormatError);
  EXPECT_THROW(parse_dataset(replace_line(text, 2, "22.5" + tail), "x"), FormatError);
  EXPECT_THROW(parse_dataset(replace_line(text, 2, "19.75" + tail), "x"), FormatError);
  EXPECT_THROW(parse_dataset(replace_line(text, 1, "a,b"), "x"), FormatError);
  std::string bad_label = row;
  bad_label.replace(bad_label.rfind(",person,"), 8, ",human,");
  if (ds.samples[0].label == Label::Person) {
    EXPECT_THROW(parse_dataset(replace_line(text, 2, bad_label), "x"), FormatError);
  }
}

// ---- fold plans --------------------------------------------------------------

TEST(FoldIo, RoundTrip) {
  const Dataset ds = sim::generate_main(10, 2);
  const FoldPlan plan = make_folds(ds, 5, 3);
  const std::string text = format_fold_plan(plan);
  EXPECT_EQ(text.substr(0, 17), "format-version: 1");
  EXPECT_EQ(parse_fold_plan(text), plan);
  EXPECT_EQ(format_fold_plan(parse_fold_plan(text)), text);
}

TEST(FoldIo, RejectsFutureVersionsAndBadIndices) {
  const FoldPlan plan{2, {0, 1, 1, 0}};
  const std::string text = format_fold_plan(plan);
  EXPECT_THROW(parse_fold_plan(replace_line(text, 1, "format-version: 99")),
               VersionError);
  EXPECT_THROW(parse_fold_plan(replace_line(text, 6, "2")), FormatError);
}

// ---- models ----------------------------------------------------------------

std::vector<TrainedModel> trained_models() {
  const Dataset train = testing::gaussian_blobs(12, 1.5, 4);
  classifiers::SvmSpec rbf;
  rbf.params.kernel = classifiers::KernelKind::Rbf;
  return {classifiers::train(classifiers::KnnSpec{3, classifiers::Weighting::Distance}, train),
          classifiers::train(classifiers::SvmSpec{}, train),
          classifiers::train(rbf, train),
          classifiers::train(classifiers::NnSpec{5, {0.05, 8, 10}, 3}, train)};
}

TEST(ModelIo, RoundTripPreservesEveryDecision) {
  Rng rng(5);
  for (const auto& model : trained_models()) {
    const std::string text = format_model(model);
    const TrainedModel back = parse_model(text);
    EXPECT_EQ(format_model(back), text);
    for (int i = 0; i < 100; ++i) {
      Features x;
      for (double& v : x) v = rng.uniform(20.0, 30.0);
      ASSERT_EQ(classifiers::predict(back, x), classifiers::predict(model, x));
    }
  }
}

TEST(ModelIo, HeaderComesFirst) {
  const std::string text = format_model(trained_models()[1]);
  EXPECT_EQ(text.substr(0, 37), "format-version: 1\nmodel-kind: svm\nker");
}

TEST(ModelIo, RejectsFutureVersions) {
  const std::string text = format_model(trained_models()[0]);
  EXPECT_THROW(parse_model(replace_line(text, 1, "format-version: 99")),
               VersionError);
}

TEST(ModelIo, RejectsTruncatedOrCorruptPayloads) {
  const std::string text = format_model(trained_models()[3]);
  // Cut the final line.
  const std::string cut = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
  EXPECT_THROW(parse_model(cut), FormatError);
  EXPECT_THROW(parse_model(text + "extra: 1\n"), FormatError);
  EXPECT_THROW(parse_model(replace_line(text, 2, "model-kind: tree")), FormatError);
  try {
    parse_model(replace_line(text, 3, "hidden: 0"));
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

// ---- reports ---------------------------------------------------------------

RunReport sample_report() {
  RunReport r;
  r.tool_version = tool_version();
  r.command = "eval";
  r.config = {{"data", "var.csv"}, {"model", "a.model"}};
  r.metrics = eval::MetricsReport::from_counts({5, 1, 3, 1});
  eval::CvResult cv;
  cv.folds = {eval::MetricsReport::from_counts({2, 0, 2, 0}),
              eval::MetricsReport::from_counts({1, 1, 1, 1})};
  eval::summarize(cv);
  r.cv = CvSummary::from(cv);
  r.sweep = {{"knn k=1 weighting=uniform", *r.cv}};
  eval::ConditionReport c;
  c.overall = *r.metrics;
  c.by_condition[ConditionTag::Duvet5min] = eval::MetricsReport::from_counts({3, 0, 0, 1});
  r.evaluations = {{"a", c}};
  return r;
}

TEST(ReportIo, RoundTripIsByteIdentical) {
  const RunReport r = sample_report();
  const std::string text = format_report(r);
  EXPECT_EQ(parse_report(text), r);
  EXPECT_EQ(format_report(parse_report(text)), text);
  EXPECT_EQ(text.back(), '\n');
}

TEST(ReportIo, UndefinedMetricsAreNull) {
  const std::string text = format_metrics(eval::MetricsReport::from_counts({3, 0, 0, 1}));
  EXPECT_NE(text.find("\"specificity\": null"), std::string::npos);
  EXPECT_FALSE(parse_metrics(text).specificity.has_value());
}

TEST(ReportIo, RejectsInconsistentOrFutureReports) {
  std::string text = format_report(sample_report());
  std::string future = text;
  future.replace(future.find("\"format-version\": 1"), 19, "\"format-version\": 99");
  EXPECT_THROW(parse_report(future), VersionError);
  std::string tampered = text;
  tampered.replace(tampered.find("\"tp\": 5"), 7, "\"tp\": 6");
  EXPECT_THROW(parse_report(tampered), FormatError);
  EXPECT_THROW(parse_report("{"), FormatError);
}

TEST(ReportIo, RejectsDuplicateConfigKeys) {
  RunReport r = sample_report();
  r.config.emplace_back(r.config.front());
  EXPECT_THROW(format_report(r), InvalidInputError);
}

TEST(ReportIo, PlotTables) {
  const RunReport r = sample_report();
  EXPECT_EQ(sweep_plot_csv("knn-grid", r.sweep),
            "family,config,mean_accuracy,std_accuracy\n"
            "knn-grid,knn k=1 weighting=uniform,0.75,0.25\n");
  EXPECT_EQ(condition_plot_csv(r.evaluations),
            "model,condition,n,accuracy,sensitivity,specificity\n"
            "a,duvet_5,4,0.75,0.75,\n");
  EXPECT_EQ(overall_plot_csv(r.evaluations),
            "model,accuracy,sensitivity,specificity\n"
            "a,0.8,0.8333333333333334,0.75\n");
}

// ---- monitor traces --------------------------------------------------------

TEST(MonitorIo, TraceRoundTripAndEvents) {
  const std::vector<monitor::LabeledTick> trace{{0, Label::Person},
                                                {60, Label::NoPerson}};
  const std::string text = format_trace(trace);
  EXPECT_EQ(text, "timestamp,label\n0,person\n60,no_person\n");
  const auto back = parse_trace(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].ts, 60);
  EXPECT_EQ(back[1].label, Label::NoPerson);
  const std::vector<monitor::Event> events{{900, monitor::EventKind::BedExit}};
  EXPECT_EQ(format_events(events, "bed7"),
            "timestamp,event_kind,bed_id\n900,bed_exit,bed7\n");
  EXPECT_THROW(parse_trace("timestamp,label\n1,maybe\n"), FormatError);
}

}  // namespace
}  // namespace thermal_sense::io
