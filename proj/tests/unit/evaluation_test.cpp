#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "thermal_sense/condition_eval.hpp"
#include "thermal_sense/cross_validation.hpp"
#include "thermal_sense/errors.hpp"
#include "thermal_sense/metrics.hpp"
#include "thermal_sense/parallel.hpp"
#include "thermal_sense/split.hpp"
#include "thermal_sense/sweep.hpp"

namespace thermal_sense::eval {
namespace {

constexpr Label P = Label::Person;
constexpr Label N = Label::NoPerson;

TEST(Confusion, CountsEachCell) {
  const std::vector<Label> pred{P, N, P, N};
  const std::vector<Label> truth{P, P, N, N};
  const ConfusionCounts c = confusion(pred, truth);
  EXPECT_EQ(c, (ConfusionCounts{1, 1, 1, 1}));
  EXPECT_DOUBLE_EQ(accuracy(c), 0.5);
  EXPECT_DOUBLE_EQ(*sensitivity(c), 0.5);
  EXPECT_DOUBLE_EQ(*specificity(c), 0.5);
}

TEST(Confusion, RejectsMismatchedOrEmptyInput) {
  const std::vector<Label> two{P, N}, one{P};
  EXPECT_THROW(confusion(two, one), InvalidInputError);
  EXPECT_THROW(confusion({}, {}), InvalidInputError);
}

TEST(Metrics, ImbalancedCounts) {
  const ConfusionCounts c{47, 2, 48, 3};
  EXPECT_DOUBLE_EQ(accuracy(c), 0.95);
  EXPECT_DOUBLE_EQ(*sensitivity(c), 47.0 / 50.0);
  EXPECT_DOUBLE_EQ(*specificity(c), 48.0 / 50.0);
}

TEST(Metrics, UndefinedWhenAClassIsAbsent) {
  const ConfusionCounts only_people{5, 0, 0, 1};
  EXPECT_TRUE(sensitivity(only_people).has_value());
  EXPECT_FALSE(specificity(only_people).has_value());
  const ConfusionCounts only_empty{0, 2, 7, 0};
  EXPECT_FALSE(sensitivity(only_empty).has_value());
  EXPECT_THROW(accuracy(ConfusionCounts{}), InvalidInputError);
}

TEST(Metrics, AgreeWithDirectCounting) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(60);
    std::vector<Label> pred(n), truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred[i] = rng.index(2) ? P : N;
      truth[i] = rng.index(2) ? P : N;
    }
    const auto oracle = testing::direct_metrics(pred, truth);
    const auto report = MetricsReport::from_counts(confusion(pred, truth));
    EXPECT_EQ(report.accuracy, oracle.accuracy.to_double());
    EXPECT_EQ(report.sensitivity.has_value(), oracle.sensitivity_defined);
    if (report.sensitivity) {
      EXPECT_EQ(*report.sensitivity, oracle.sensitivity.to_double());
    }
    EXPECT_EQ(report.specificity.has_value(), oracle.specificity_defined);
    if (report.specificity) {
      EXPECT_EQ(*report.specificity, oracle.specificity.to_double());
    }
  }
}

TEST(Summarize, PopulationStandardDeviation) {
  CvResult r;
  r.folds.push_back(MetricsReport::from_counts({1, 0, 1, 0}));  // 1.0
  r.folds.push_back(MetricsReport::from_counts({1, 1, 0, 0}));  // 0.5
  summarize(r);
  EXPECT_DOUBLE_EQ(r.mean_accuracy, 0.75);
  EXPECT_DOUBLE_EQ(r.std_accuracy, 0.25);
  EXPECT_EQ(r.pooled, (ConfusionCounts{2, 1, 1, 0}));
}

TEST(CrossValidate, EveryFoldPredictsItsOwnSamples) {
  const Dataset ds = testing::gaussian_blobs(25, 3.0, 4);
  const FoldPlan plan = make_folds(ds, 5, 2);
  const CvResult r =
      cross_validate(ds, plan, classifiers::KnnSpec{1, classifiers::Weighting::Uniform});
  ASSERT_EQ(r.folds.size(), 5u);
  std::size_t total = 0;
  for (const auto& f : r.folds) total += f.counts.total();
  EXPECT_EQ(total, ds.size());
  EXPECT_EQ(r.pooled.total(), ds.size());
  EXPECT_EQ(r.predictions.size(), ds.size());
  EXPECT_DOUBLE_EQ(r.mean_accuracy, 1.0);
}

TEST(CrossValidate, ThreadCountDoesNotChangeResults) {
  const Dataset ds = testing::gaussian_blobs(20, 0.5, 8);
  const FoldPlan plan = make_folds(ds, 4, 2);
  const classifiers::ClassifierSpec spec = classifiers::SvmSpec{};
  EXPECT_EQ(cross_validate(ds, plan, spec, 1), cross_validate(ds, plan, spec, 4));
}

TEST(CrossValidate, RejectsMismatchedPlans) {
  const Dataset ds = testing::gaussian_blobs(10, 1.0, 1);
  FoldPlan plan = make_folds(ds, 2, 1);
  plan.assignment.pop_back();
  EXPECT_THROW(cross_validate(ds, plan, classifiers::KnnSpec{}),
               InvalidInputError);
}

TEST(Sweep, GridSizes) {
  EXPECT_EQ(sweep_grid(SweepFamily::SvmKernels).size(), 4u);
  EXPECT_EQ(sweep_grid(SweepFamily::KnnGrid).size(), 8u);
  const auto widths = sweep_grid(SweepFamily::NnWidths);
  ASSERT_EQ(widths.size(), 11u);
  EXPECT_EQ(std::get<classifiers::NnSpec>(widths.front()).hidden, 1u);
  EXPECT_EQ(std::get<classifiers::NnSpec>(widths.back()).hidden, 1024u);
}

TEST(Sweep, RowsShareThePlanAndMatchSingleRuns) {
  const Dataset ds = testing::gaussian_blobs(12, 1.0, 3);
  const FoldPlan plan = make_folds(ds, 3, 9);
  const auto rows = sweep(ds, plan, SweepFamily::KnnGrid);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].config, "knn k=1 weighting=uniform");
  for (const auto& row : rows) {
    EXPECT_EQ(row.result, cross_validate(ds, plan, row.spec));
  }
}

TEST(Sweep, FamilySpellings) {
  EXPECT_EQ(parse_family("svm-kernels"), SweepFamily::SvmKernels);
  EXPECT_EQ(parse_family("nn-widths"), SweepFamily::NnWidths);
  EXPECT_FALSE(parse_family("svm"));
}

TEST(ConditionEval, SubsetsFollowTheTags) {
  Dataset ds{"d", {}};
  auto add = [&](Label l, ConditionTag t) {
    ds.samples.push_back(testing::sample(l, {}, 20.0, t));
  };
  add(P, ConditionTag::HotRoom);
  add(N, ConditionTag::HotRoom);
  add(P, ConditionTag::Duvet5min);
  add(N, ConditionTag::Duvet0min);
  const std::vector<Label> pred{P, P, N, N};
  const ConditionReport r = evaluate_by_condition(pred, ds);
  EXPECT_EQ(r.overall.counts, (ConfusionCounts{1, 1, 1, 1}));
  ASSERT_EQ(r.by_condition.size(), 3u);
  EXPECT_DOUBLE_EQ(r.by_condition.at(ConditionTag::HotRoom).accuracy, 0.5);
  const auto& d5 = r.by_condition.at(ConditionTag::Duvet5min);
  EXPECT_DOUBLE_EQ(d5.accuracy, 0.0);
  EXPECT_FALSE(d5.specificity.has_value());
  EXPECT_EQ(r.by_condition.count(ConditionTag::Baseline), 0u);
}

TEST(ParallelFor, RunsEveryIndexOnceAndRethrows) {
  std::vector<int> hits(50, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t i) {
                              if (i == 6) throw TrainingError("boom");
                            }),
               TrainingError);
}

}  // namespace
}  // namespace thermal_sense::eval
