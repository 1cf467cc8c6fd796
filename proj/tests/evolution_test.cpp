// Copyright 2026 The Iris Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>

#include "iris/errors.hpp"
#include "iris/evolution.hpp"
#include "iris/report.hpp"
#include "support/oracles.hpp"

namespace iris {
namespace {

MetricsMatrix fixture(const std::string& name) {
  return matrix_from_csv(testing::read_file(std::string(IRIS_TEST_DATA_DIR) + "/fixtures/" + name));
}

TrendClass classify(std::vector<std::uint64_t> s) { return classify_trend(s); }

TEST(ClassifyTrend, Classes) {
  EXPECT_EQ(classify({760, 1050, 1197, 1246, 1387, 1823, 2214, 2645}), TrendClass::StrictlyIncreasing);
  EXPECT_EQ(classify({386, 374, 448}), TrendClass::Fluctuating);
  EXPECT_EQ(classify({4, 4, 4}), TrendClass::Constant);
  EXPECT_EQ(classify({1, 1, 2}), TrendClass::NonDecreasing);
  EXPECT_EQ(classify({3, 2, 1}), TrendClass::StrictlyDecreasing);
  EXPECT_EQ(classify({3, 3, 1}), TrendClass::NonIncreasing);
  EXPECT_EQ(classify({0, 5}), TrendClass::StrictlyIncreasing);
}

TEST(ClassifyTrend, TooShort) {
  EXPECT_THROW(classify({7}), InsufficientReleasesError);
  EXPECT_THROW(classify({}), InsufficientReleasesError);
}

TEST(ClassifyTrend, Names) {
  EXPECT_EQ(to_string(TrendClass::NonDecreasing), "non-decreasing");
  EXPECT_EQ(to_string(TrendClass::Fluctuating), "fluctuating");
}

TEST(BuildMatrix, KeepsOrderAndRejectsEmpty) {
  EXPECT_THROW(build_matrix({}), InputError);
  MetricsVector a, b;
  a.release_name = "z";
  b.release_name = "a";
  const MetricsMatrix m = build_matrix({a, b});
  ASSERT_EQ(m.rows.size(), 2u);
  EXPECT_EQ(m.rows[0].release_name, "z");
  EXPECT_EQ(build_matrix({a}).rows.size(), 1u);
}

TEST(BuildMatrix, DrawingShapesShape) {
  const MetricsMatrix m = fixture("drawing_shapes.csv");
  ASSERT_EQ(m.rows.size(), 3u);
  EXPECT_EQ(m.column(Metric::LOC), (std::vector<std::uint64_t>{386, 374, 448}));
}

TEST(AnalyzeEvolution, MobileMedia) {
  const TrendReport r = analyze_evolution(fixture("mobile_media.csv"));
  EXPECT_EQ(r[Metric::NOMI].first, 299u);
  EXPECT_EQ(r[Metric::NOMI].last, 1200u);
  EXPECT_EQ(r[Metric::NOMI].net_change, 901);
  EXPECT_EQ(r[Metric::NOMI].deltas.size(), 7u);
  for (Metric m : {Metric::LOC, Metric::NOA, Metric::NOM, Metric::NOID, Metric::NOAA, Metric::NOMI})
    EXPECT_EQ(r[m].trend, TrendClass::StrictlyIncreasing) << metric_name(m);
  for (Metric m : {Metric::NOC, Metric::NOP, Metric::NOIR})
    EXPECT_EQ(r[m].trend, TrendClass::NonDecreasing) << metric_name(m);
  for (Metric m : kAllMetrics) {
    const TrendClass t = r[m].trend;
    EXPECT_TRUE(t == TrendClass::Constant || t == TrendClass::StrictlyIncreasing || t == TrendClass::NonDecreasing)
        << metric_name(m);
  }
}

TEST(AnalyzeEvolution, RhinoLocDips) {
  const MetricsMatrix m = fixture("rhino.csv");
  const TrendReport r = analyze_evolution(m);
  EXPECT_EQ(r[Metric::LOC].trend, TrendClass::Fluctuating);
  EXPECT_EQ(r[Metric::LOC].net_change, 43425 - 20335);
  ASSERT_EQ(m.rows[7].release_name, "rhi. 1.6R1");
  EXPECT_EQ(r[Metric::LOC].deltas[7], 37771 - 37961);
}

TEST(AnalyzeEvolution, IdenticalRowsAreConstant) {
  MetricsVector v;
  v[Metric::LOC] = 10;
  const TrendReport r = analyze_evolution(build_matrix({v, v}));
  for (Metric m : kAllMetrics) {
    EXPECT_EQ(r[m].trend, TrendClass::Constant);
    EXPECT_EQ(r[m].deltas, (std::vector<std::int64_t>{0}));
  }
  const HypothesisVerdict verdict = evaluate_hypothesis(r);
  EXPECT_FALSE(verdict.complexity_supported);
  EXPECT_FALSE(verdict.growth_supported);
  EXPECT_FALSE(verdict.change_detected);
}

TEST(AnalyzeEvolution, SingleRowIsAnError) {
  EXPECT_THROW(analyze_evolution(build_matrix({MetricsVector{}})), InsufficientReleasesError);
}

TEST(Verdict, MobileMediaSupportsEverything) {
  const HypothesisVerdict v = evaluate_hypothesis(analyze_evolution(fixture("mobile_media.csv")));
  EXPECT_TRUE(v.complexity_supported);
  EXPECT_TRUE(v.growth_supported);
  EXPECT_TRUE(v.change_detected);
  EXPECT_EQ(verdict_line(v), "complexity: supported; growth: supported; change: detected");
  ASSERT_EQ(v.evidence.size(), kMetricCount);
  EXPECT_EQ(v.evidence[static_cast<std::size_t>(Metric::NOIR)], "NOIR: 8 -> 39 (+31), non-decreasing");
}

TEST(Verdict, DrawingShapesSupportedDespiteDip) {
  const HypothesisVerdict v = evaluate_hypothesis(analyze_evolution(fixture("drawing_shapes.csv")));
  EXPECT_TRUE(v.complexity_supported);
  EXPECT_TRUE(v.growth_supported);
  EXPECT_TRUE(v.change_detected);
}

TEST(Verdict, AnyShrinkingMemberBlocksTheGroup) {
  MetricsVector a, b;
  a[Metric::NOIR] = 5;
  b[Metric::NOIR] = 4;
  a[Metric::NOMI] = 1;
  b[Metric::NOMI] = 9;
  a[Metric::LOC] = 3;
  b[Metric::LOC] = 3;
  const HypothesisVerdict v = evaluate_hypothesis(analyze_evolution(build_matrix({a, b})));
  EXPECT_FALSE(v.complexity_supported);
  EXPECT_FALSE(v.growth_supported);
  EXPECT_TRUE(v.change_detected);
  EXPECT_EQ(verdict_line(v), "complexity: unsupported; growth: unsupported; change: detected");
}

TEST(Verdict, ChangeWithZeroNetIsStillChange) {
  MetricsVector a, b;
  b[Metric::LOC] = 4;
  const HypothesisVerdict v = evaluate_hypothesis(analyze_evolution(build_matrix({a, b, a})));
  EXPECT_TRUE(v.change_detected);
  EXPECT_FALSE(v.growth_supported);
}

TEST(Commonality, DrawingShapes) {
  const CommonalityReport c = commonality_report(fixture("drawing_shapes.csv"));
  auto has = [](const std::vector<Metric>& v, Metric m) { return std::find(v.begin(), v.end(), m) != v.end(); };
  EXPECT_TRUE(has(c.common_metrics, Metric::NOP));
  EXPECT_TRUE(has(c.common_metrics, Metric::NOI));
  EXPECT_TRUE(has(c.varying_metrics, Metric::LOC));
  EXPECT_EQ(c.common_metrics.size() + c.varying_metrics.size(), kMetricCount);
}

TEST(Commonality, SingleRowAllCommon) {
  EXPECT_EQ(commonality_report(build_matrix({MetricsVector{}})).common_metrics.size(), kMetricCount);
}

TEST(Commonality, OnlyLocDiffers) {
  MetricsVector a;
  a[Metric::NOC] = 3;
  MetricsVector b = a;
  b[Metric::LOC] = 12;
  const CommonalityReport c = commonality_report(build_matrix({a, b}));
  EXPECT_EQ(c.common_metrics.size(), 12u);
  EXPECT_EQ(c.varying_metrics, (std::vector<Metric>{Metric::LOC}));
}

TEST(Fixtures, PublishedObservations) {
  const MetricsMatrix shapes = fixture("drawing_shapes.csv");
  EXPECT_EQ(shapes.rows[0][Metric::NOC], shapes.rows[1][Metric::NOC]);
  EXPECT_EQ(shapes.rows[0][Metric::NOM], shapes.rows[1][Metric::NOM]);
  EXPECT_EQ(fixture("rhino.csv").rows.size(), 16u);
  EXPECT_EQ(fixture("argouml.csv").rows.size(), 10u);
}

}  // namespace
}  // namespace iris
