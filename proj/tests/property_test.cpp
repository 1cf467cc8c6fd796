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
#include <random>

#include "iris/linker.hpp"
#include "iris/metrics.hpp"
#include "iris/parser.hpp"
#include "iris/report.hpp"
#include "support/generator.hpp"
#include "support/oracles.hpp"

namespace iris {
namespace {

using testing::Blueprint;
using testing::ExpectedCounts;
using testing::Naming;

constexpr int kCases = 150;

VariantModel build(const std::vector<SourceFile>& files) {
  std::vector<CompilationUnit> units;
  for (const SourceFile& f : files) units.push_back(parse_unit(f));
  return link_variant(std::move(units), "gen", Date{2020, 1, 1});
}

void expect_no_parse_errors(const VariantModel& model, const std::vector<SourceFile>& files) {
  for (const CompilationUnit& u : model.units) {
    if (!u.parse_error) continue;
    std::string text;
    for (const SourceFile& f : files)
      if (f.path == u.path) text = f.text;
    ADD_FAILURE() << u.path << ":" << u.parse_error->line << ":" << u.parse_error->column << " "
                  << u.parse_error->message << "\n"
                  << text;
  }
}

std::string dump(const std::vector<SourceFile>& files) {
  std::string out;
  for (const SourceFile& f : files) out += "=== " + f.path + "\n" + f.text;
  return out;
}

TEST(GeneratedRelease, MetricsMatchBlueprintCounts) {
  for (int seed = 0; seed < kCases; ++seed) {
    std::mt19937_64 rng(seed);
    const Blueprint bp = testing::make_blueprint(rng);
    std::uint64_t loc = 0;
    const std::vector<SourceFile> files = testing::render(bp, Naming(seed), &loc);
    const ExpectedCounts e = testing::expected_counts(bp);
    const VariantModel model = build(files);
    expect_no_parse_errors(model, files);
    const MetricsVector v = compute_metrics(model);
    SCOPED_TRACE("seed " + std::to_string(seed) + "\n" + dump(files));

    std::uint64_t oracle = 0;
    for (const SourceFile& f : files) oracle += testing::oracle_loc(f.text);
    EXPECT_EQ(v[Metric::LOC], loc);
    EXPECT_EQ(oracle, loc);
    EXPECT_EQ(v[Metric::NOP], e.packages);
    EXPECT_EQ(v[Metric::NOC], e.classes);
    EXPECT_EQ(v[Metric::NOI], e.interfaces);
    EXPECT_EQ(v[Metric::NOA], e.attributes);
    EXPECT_EQ(v[Metric::NOM], e.methods);
    EXPECT_EQ(v[Metric::NOL], e.locals);
    EXPECT_EQ(v[Metric::NOPM], e.public_methods);
    EXPECT_EQ(v[Metric::NOSM], e.static_methods);
    EXPECT_EQ(v[Metric::NOIR], e.edges);
    EXPECT_EQ(v[Metric::NOAA], e.accesses);
    EXPECT_EQ(v[Metric::NOMI], e.invocations);
    EXPECT_EQ(v[Metric::NOID], e.packages + e.classes + e.attributes + e.methods);
    EXPECT_EQ(count_inheritance_relations(model, InheritanceMode::ExtendsOnly), e.extends_edges);
    EXPECT_EQ(count_attribute_accesses(model, DependencyScope::CrossClass), e.cross_accesses);
    EXPECT_EQ(count_method_invocations(model, DependencyScope::CrossClass), e.cross_invocations);
    EXPECT_EQ(count_method_invocations(model, DependencyScope::All, true), e.invocations + e.constructor_calls);
    EXPECT_EQ(count_method_invocations(model, DependencyScope::CrossClass, true),
              e.cross_invocations + e.cross_constructor_calls);
    if (::testing::Test::HasFailure()) return;
  }
}

TEST(Properties, AlphaRenamingChangesNoCount) {
  const MetricsConfig configs[] = {
      MetricsConfig{},
      MetricsConfig{InheritanceMode::ExtendsOnly, DependencyScope::CrossClass, false, true},
  };
  for (int seed = 0; seed < kCases; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    const Blueprint bp = testing::make_blueprint(rng);
    const std::vector<SourceFile> a = testing::render(bp, Naming(seed));
    const std::vector<SourceFile> b = testing::render(bp, Naming(seed + 7919));
    ASSERT_NE(a.front().text, b.front().text);
    const VariantModel ma = build(a);
    const VariantModel mb = build(b);
    for (const MetricsConfig& cfg : configs) {
      EXPECT_EQ(compute_metrics(ma, cfg).values, compute_metrics(mb, cfg).values) << "seed " << seed;
    }
  }
}

TEST(Properties, AddingAFileNeverDecreasesAMetric) {
  for (int seed = 0; seed < kCases; ++seed) {
    std::mt19937_64 rng(2000 + seed);
    const Blueprint bp = testing::make_blueprint(rng);
    std::vector<bool> keep(bp.types.size(), true);
    keep[std::uniform_int_distribution<std::size_t>(0, keep.size() - 1)(rng)] = false;
    const MetricsVector smaller = compute_metrics(build(testing::render(bp, Naming(seed), nullptr, keep)));
    const MetricsVector larger = compute_metrics(build(testing::render(bp, Naming(seed))));
    for (Metric m : kAllMetrics)
      EXPECT_LE(smaller[m], larger[m]) << metric_name(m) << " seed " << seed;
  }
}

TEST(Properties, CrossClassNeverExceedsAll) {
  for (int seed = 0; seed < kCases; ++seed) {
    std::mt19937_64 rng(3000 + seed);
    const VariantModel model = build(testing::render(testing::make_blueprint(rng), Naming(seed)));
    EXPECT_LE(count_attribute_accesses(model, DependencyScope::CrossClass),
              count_attribute_accesses(model, DependencyScope::All));
    EXPECT_LE(count_method_invocations(model, DependencyScope::CrossClass),
              count_method_invocations(model, DependencyScope::All));
    EXPECT_LE(count_inheritance_relations(model, InheritanceMode::ExtendsOnly),
              count_inheritance_relations(model, InheritanceMode::All));
  }
}

TEST(Properties, LocIsAdditiveUnderConcatenation) {
  static const char* kFragments[] = {
      "int a = 1;",       "// only a comment", "/* block */",       "/* open",         "still comment */ x();",
      "",                 "   ",               "s = \"/* no */\";", "c = '/';",        "t = \"// no\"; // yes",
      "/** doc */ int b;", "}",                "\t\t",              "y = 2; /* tail */",
  };
  for (int seed = 0; seed < kCases; ++seed) {
    std::mt19937_64 rng(4000 + seed);
    std::vector<std::string> texts;
    const Blueprint bp = testing::make_blueprint(rng);
    for (const SourceFile& f : testing::render(bp, Naming(seed))) texts.push_back(f.text);
    // A few hand-assembled snippets with balanced comments.
    for (int k = 0; k < 3; ++k) {
      std::string s;
      bool open = false;
      const int n = std::uniform_int_distribution<int>(0, 12)(rng);
      for (int i = 0; i < n; ++i) {
        std::string frag = kFragments[std::uniform_int_distribution<std::size_t>(0, std::size(kFragments) - 1)(rng)];
        if (frag == "/* open") open = true;
        if (frag.rfind("still comment", 0) == 0) {
          if (!open) continue;
          open = false;
        }
        s += frag + "\n";
      }
      if (open) s += "*/\n";
      texts.push_back(s);
    }
    std::shuffle(texts.begin(), texts.end(), rng);
    std::string joined;
    std::size_t sum = 0;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (i) joined += "\n";
      joined += texts[i];
      sum += count_loc(texts[i]);
      EXPECT_EQ(count_loc(texts[i]), testing::oracle_loc(texts[i])) << texts[i];
    }
    EXPECT_EQ(count_loc(joined), sum) << "seed " << seed;
  }
}

TEST(Properties, ReversingASeriesMirrorsItsTrend) {
  auto mirror = [](TrendClass t) {
    switch (t) {
      case TrendClass::StrictlyIncreasing:
        return TrendClass::StrictlyDecreasing;
      case TrendClass::StrictlyDecreasing:
        return TrendClass::StrictlyIncreasing;
      case TrendClass::NonDecreasing:
        return TrendClass::NonIncreasing;
      case TrendClass::NonIncreasing:
        return TrendClass::NonDecreasing;
      default:
        return t;
    }
  };
  std::mt19937_64 rng(5000);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
    const std::uint64_t spread = std::uniform_int_distribution<std::uint64_t>(0, 4)(rng);
    std::vector<std::uint64_t> s(len);
    // Mostly-monotone series so every class shows up often.
    const int shape = std::uniform_int_distribution<int>(0, 2)(rng);
    for (std::uint64_t& x : s) x = std::uniform_int_distribution<std::uint64_t>(0, spread)(rng);
    if (shape == 1) std::sort(s.begin(), s.end());
    if (shape == 2) std::sort(s.rbegin(), s.rend());
    std::vector<std::uint64_t> r(s.rbegin(), s.rend());
    const TrendClass forward = classify_trend(s);
    EXPECT_EQ(forward, testing::oracle_trend(s));
    EXPECT_EQ(classify_trend(r), mirror(forward));
  }
}

TEST(Properties, ConstructorToggleShiftsMethodsByConstructorCount) {
  for (int seed = 0; seed < kCases; ++seed) {
    std::mt19937_64 rng(6000 + seed);
    const Blueprint bp = testing::make_blueprint(rng);
    const ExpectedCounts e = testing::expected_counts(bp);
    const VariantModel model = build(testing::render(bp, Naming(seed)));
    MetricsConfig without;
    without.include_constructors = false;
    const MetricsVector in = compute_metrics(model);
    const MetricsVector out = compute_metrics(model, without);
    EXPECT_EQ(in[Metric::NOM] - out[Metric::NOM], e.constructors);
    EXPECT_EQ(in[Metric::NOID] - out[Metric::NOID], e.constructors);
    EXPECT_EQ(in[Metric::NOPM] - out[Metric::NOPM], e.public_constructors);
  }
}

TEST(Properties, FileOrderDoesNotChangeTheModel) {
  for (int seed = 0; seed < kCases; ++seed) {
    std::mt19937_64 rng(7000 + seed);
    std::vector<SourceFile> files = testing::render(testing::make_blueprint(rng), Naming(seed));
    const VariantModel a = build(files);
    std::shuffle(files.begin(), files.end(), rng);
    const VariantModel b = build(files);
    EXPECT_EQ(a.units, b.units);
    EXPECT_EQ(a.inheritance_edges, b.inheritance_edges);
    EXPECT_EQ(compute_metrics(a).values, compute_metrics(b).values);
  }
}

TEST(Properties, IdentifierSumAndMethodBounds) {
  for (int seed = 0; seed < kCases; ++seed) {
    std::mt19937_64 rng(8000 + seed);
    const MetricsVector v = compute_metrics(build(testing::render(testing::make_blueprint(rng), Naming(seed))));
    EXPECT_EQ(v[Metric::NOID], v[Metric::NOP] + v[Metric::NOC] + v[Metric::NOA] + v[Metric::NOM]);
    EXPECT_LE(v[Metric::NOPM], v[Metric::NOM]);
    EXPECT_LE(v[Metric::NOSM], v[Metric::NOM]);
  }
}

TEST(Properties, InterfaceOnlyReleaseHasNoDependencies) {
  for (int seed = 0; seed < kCases; ++seed) {
    std::mt19937_64 rng(9000 + seed);
    const VariantModel model = build(testing::interface_only_release(rng, Naming(seed)));
    const MetricsVector v = compute_metrics(model);
    EXPECT_EQ(v[Metric::NOAA], 0u);
    EXPECT_EQ(v[Metric::NOMI], 0u);
    EXPECT_EQ(v[Metric::NOC], 0u);
    EXPECT_GE(v[Metric::NOI], 1u);
  }
}

TEST(Properties, MatrixCsvRoundTripKeepsTrends) {
  std::mt19937_64 rng(10000);
  for (int i = 0; i < kCases; ++i) {
    MetricsMatrix m;
    const int rows = std::uniform_int_distribution<int>(2, 8)(rng);
    for (int r = 0; r < rows; ++r) {
      MetricsVector v;
      v.release_name = "rel " + std::to_string(r) + (r % 3 == 0 ? ",x" : "");
      v.release_date = Date{2000 + r, 1 + r % 12, 1 + r % 28};
      for (std::uint64_t& x : v.values) x = std::uniform_int_distribution<std::uint64_t>(0, 50)(rng);
      m.rows.push_back(v);
    }
    const MetricsMatrix back = matrix_from_csv(matrix_to_csv(m));
    EXPECT_EQ(back, m);
    EXPECT_EQ(analyze_evolution(back), analyze_evolution(m));
    EXPECT_EQ(matrix_to_csv(back), matrix_to_csv(m));
  }
}

}  // namespace
}  // namespace iris
