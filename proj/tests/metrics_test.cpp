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

#include "support/helpers.hpp"

namespace iris {
namespace {

using testing::Files;
using testing::link_sources;
using testing::metrics_of;

const Files kTwoClasses{
    {"p/A.java", "package p; public class A { int x; void m(){ x=1; } }"},
    {"p/B.java", "package p; class B extends A { public static void n(){ int k=0; m2(); } void m2(){} }"},
};

TEST(MetricNames, RoundTrip) {
  for (Metric m : kAllMetrics) EXPECT_EQ(metric_from_name(metric_name(m)), m);
  EXPECT_FALSE(metric_from_name("XYZ"));
  EXPECT_TRUE(is_complexity_metric(Metric::NOMI));
  EXPECT_FALSE(is_complexity_metric(Metric::LOC));
}

TEST(Modes, ParseAndPrint) {
  EXPECT_EQ(inheritance_mode_from_string("extends-only"), InheritanceMode::ExtendsOnly);
  EXPECT_EQ(dependency_scope_from_string("cross-class"), DependencyScope::CrossClass);
  EXPECT_EQ(to_string(InheritanceMode::All), "all");
  EXPECT_FALSE(dependency_scope_from_string("some"));
}

TEST(CountDeclarations, EmptyModelIsAllZero) {
  const VariantModel m = link_sources({});
  EXPECT_EQ(count_declarations(m).values, (MetricsVector{}.values));
  EXPECT_EQ(compute_metrics(m).values, (MetricsVector{}.values));
}

TEST(CountDeclarations, SingleClass) {
  const MetricsVector v = count_declarations(link_sources({kTwoClasses[0]}));
  EXPECT_EQ(v[Metric::NOP], 1u);
  EXPECT_EQ(v[Metric::NOC], 1u);
  EXPECT_EQ(v[Metric::NOI], 0u);
  EXPECT_EQ(v[Metric::NOA], 1u);
  EXPECT_EQ(v[Metric::NOM], 1u);
  EXPECT_EQ(v[Metric::NOL], 0u);
  EXPECT_EQ(v[Metric::NOPM], 0u);
  EXPECT_EQ(v[Metric::NOSM], 0u);
}

TEST(CountDeclarations, TwoClassesSamePackage) {
  const MetricsVector v = count_declarations(link_sources(kTwoClasses));
  EXPECT_EQ(v[Metric::NOP], 1u);
  EXPECT_EQ(v[Metric::NOC], 2u);
  EXPECT_EQ(v[Metric::NOA], 1u);
  EXPECT_EQ(v[Metric::NOM], 3u);
  EXPECT_EQ(v[Metric::NOL], 1u);
  EXPECT_EQ(v[Metric::NOPM], 1u);
  EXPECT_EQ(v[Metric::NOSM], 1u);
}

TEST(ComputeMetrics, TwoClassRelease) {
  const MetricsVector v = metrics_of(kTwoClasses);
  EXPECT_EQ(v[Metric::LOC], 2u);
  EXPECT_EQ(v[Metric::NOID], 7u);
  EXPECT_EQ(v[Metric::NOIR], 1u);
  EXPECT_EQ(v[Metric::NOAA], 1u);
  EXPECT_EQ(v[Metric::NOMI], 1u);
  const MetricsVector cross = metrics_of(kTwoClasses, {.scope = DependencyScope::CrossClass});
  EXPECT_EQ(cross[Metric::NOAA], 0u);
  EXPECT_EQ(cross[Metric::NOMI], 0u);
}

TEST(InheritanceRelations, Modes) {
  EXPECT_EQ(count_inheritance_relations(link_sources({{"A.java", "class A {}"}}), InheritanceMode::All), 0u);
  EXPECT_EQ(count_inheritance_relations(link_sources({{"B.java", "class B extends A {}"}}), InheritanceMode::All), 1u);
  const VariantModel c = link_sources({{"C.java", "class C extends A implements I, J {}"}});
  EXPECT_EQ(count_inheritance_relations(c, InheritanceMode::All), 3u);
  EXPECT_EQ(count_inheritance_relations(c, InheritanceMode::ExtendsOnly), 1u);
}

TEST(AttributeAccesses, BodyFreeModel) {
  EXPECT_EQ(count_attribute_accesses(link_sources({{"I.java", "interface I { void f(); }"}}), DependencyScope::All), 0u);
}

TEST(AttributeAccesses, ReadModifyWriteCountsTwice) {
  const VariantModel m = link_sources({{"A.java", "class A { int x; void m(){ x = 1; x = x + 1; } }"}});
  EXPECT_EQ(count_attribute_accesses(m, DependencyScope::All), 3u);
  EXPECT_EQ(count_attribute_accesses(m, DependencyScope::CrossClass), 0u);
}

TEST(AttributeAccesses, OtherObjectsFieldsAreCrossClass) {
  const VariantModel m =
      link_sources({{"A.java", "class A { void n(B b){ b.y = b.y; } }"}, {"B.java", "class B { int y; }"}});
  EXPECT_EQ(count_attribute_accesses(m, DependencyScope::All), 2u);
  EXPECT_EQ(count_attribute_accesses(m, DependencyScope::CrossClass), 2u);
}

TEST(MethodInvocations, NestedAndChained) {
  EXPECT_EQ(count_method_invocations(link_sources({{"A.java", "class A { void m(){} }"}}), DependencyScope::All), 0u);
  EXPECT_EQ(count_method_invocations(link_sources({{"A.java", "class A { void m(){ foo(bar()); } }"}}),
                                     DependencyScope::All),
            2u);
  EXPECT_EQ(count_method_invocations(link_sources({{"A.java", "class A { void m(){ a.b().c(); } }"}}),
                                     DependencyScope::All),
            2u);
}

TEST(MethodInvocations, ConstructorCallsOnlyWhenAsked) {
  const VariantModel m = link_sources({{"A.java", "class A { A() { this(1); } A(int k) {} void m(){ new A(); f(); } void f(){} }"}});
  EXPECT_EQ(count_method_invocations(m, DependencyScope::All, false), 1u);
  EXPECT_EQ(count_method_invocations(m, DependencyScope::All, true), 3u);
}

TEST(ComputeMetrics, ConstructorToggle) {
  const Files files{{"A.java", "public class A { public A() {} public void m() {} static void s() {} }"}};
  const MetricsVector with = metrics_of(files);
  EXPECT_EQ(with[Metric::NOM], 3u);
  EXPECT_EQ(with[Metric::NOPM], 2u);
  const MetricsVector without = metrics_of(files, {.include_constructors = false});
  EXPECT_EQ(without[Metric::NOM], 2u);
  EXPECT_EQ(without[Metric::NOPM], 1u);
  EXPECT_EQ(without[Metric::NOSM], 1u);
  EXPECT_EQ(without[Metric::NOID], with[Metric::NOID] - 1);
}

TEST(ComputeMetrics, InterfacesAndNestedTypes) {
  const MetricsVector v = metrics_of({
      {"a/I.java", "package a; public interface I { void f(); default void g() { f(); } }"},
      {"b/O.java", "package b; class O implements a.I { public void f() {} enum E { X, Y } @interface T {} }"},
  });
  EXPECT_EQ(v[Metric::NOP], 2u);
  EXPECT_EQ(v[Metric::NOC], 2u);
  EXPECT_EQ(v[Metric::NOI], 2u);
  EXPECT_EQ(v[Metric::NOM], 3u);
  EXPECT_EQ(v[Metric::NOIR], 1u);
  EXPECT_EQ(v[Metric::NOA], 0u);
}

TEST(ComputeMetrics, BrokenFileCountsOnlyLines) {
  const MetricsVector v = metrics_of({{"A.java", "package p;\nclass A {\n  int x;\n"}, {"B.java", "class B {}\n"}});
  EXPECT_EQ(v[Metric::LOC], 4u);
  EXPECT_EQ(v[Metric::NOC], 1u);
  EXPECT_EQ(v[Metric::NOA], 0u);
  EXPECT_EQ(v[Metric::NOP], 1u);
}

}  // namespace
}  // namespace iris
