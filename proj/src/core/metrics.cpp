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

#include "iris/metrics.hpp"

namespace iris {

namespace {

struct MetricInfo {
  Metric metric;
  std::string_view name;
  std::string_view description;
};

constexpr MetricInfo kInfo[] = {
    {Metric::LOC, "LOC", "Lines of code"},
    {Metric::NOP, "NOP", "Number of packages"},
    {Metric::NOC, "NOC", "Number of classes"},
    {Metric::NOI, "NOI", "Number of interfaces"},
    {Metric::NOA, "NOA", "Number of attributes"},
    {Metric::NOM, "NOM", "Number of methods"},
    {Metric::NOL, "NOL", "Number of local variables"},
    {Metric::NOID, "NOID", "Number of identifiers"},
    {Metric::NOPM, "NOPM", "Number of public methods"},
    {Metric::NOSM, "NOSM", "Number of static methods"},
    {Metric::NOIR, "NOIR", "Number of inheritance relations"},
    {Metric::NOAA, "NOAA", "Number of attribute accesses"},
    {Metric::NOMI, "NOMI", "Number of method invocations"},
};

// Calls fn(const BodyStats&) for every body in the release: method bodies
// and per-type initializer code.
template <typename Fn>
void for_each_body(const VariantModel& model, Fn&& fn) {
  for_each_type(model, [&](const TypeDecl& t) {
    fn(t.initializer);
    for (const MethodDecl& m : t.methods)
      if (m.body) fn(*m.body);
  });
}

}  // namespace

std::string_view metric_name(Metric m) { return kInfo[static_cast<std::size_t>(m)].name; }

std::string_view metric_description(Metric m) { return kInfo[static_cast<std::size_t>(m)].description; }

std::optional<Metric> metric_from_name(std::string_view name) {
  for (const MetricInfo& info : kInfo)
    if (info.name == name) return info.metric;
  return std::nullopt;
}

bool is_complexity_metric(Metric m) { return m == Metric::NOIR || m == Metric::NOAA || m == Metric::NOMI; }

std::string_view to_string(InheritanceMode mode) { return mode == InheritanceMode::All ? "all" : "extends-only"; }

std::string_view to_string(DependencyScope scope) { return scope == DependencyScope::All ? "all" : "cross-class"; }

std::optional<InheritanceMode> inheritance_mode_from_string(std::string_view s) {
  if (s == "all") return InheritanceMode::All;
  if (s == "extends-only") return InheritanceMode::ExtendsOnly;
  return std::nullopt;
}

std::optional<DependencyScope> dependency_scope_from_string(std::string_view s) {
  if (s == "all") return DependencyScope::All;
  if (s == "cross-class") return DependencyScope::CrossClass;
  return std::nullopt;
}

MetricsVector count_declarations(const VariantModel& model, const MetricsConfig& cfg) {
  MetricsVector v;
  v.release_name = model.release_name;
  v.release_date = model.release_date;
  v[Metric::NOP] = model.packages.size();
  for_each_type(model, [&](const TypeDecl& t) {
    if (is_class_kind(t.kind)) ++v[Metric::NOC];
    if (is_interface_kind(t.kind)) ++v[Metric::NOI];
    v[Metric::NOA] += t.fields.size();
    for (const MethodDecl& m : t.methods) {
      if (m.is_constructor && !cfg.include_constructors) continue;
      ++v[Metric::NOM];
      if (m.modifiers.has(Modifier::Public)) ++v[Metric::NOPM];
      if (m.modifiers.has(Modifier::Static)) ++v[Metric::NOSM];
    }
  });
  for_each_body(model, [&](const BodyStats& b) { v[Metric::NOL] += b.local_var_decls; });
  return v;
}

std::uint64_t count_inheritance_relations(const VariantModel& model, InheritanceMode mode) {
  if (mode == InheritanceMode::All) return model.inheritance_edges.size();
  std::uint64_t n = 0;
  for (const InheritanceEdge& e : model.inheritance_edges)
    if (e.kind == EdgeKind::Extends) ++n;
  return n;
}

std::uint64_t count_attribute_accesses(const VariantModel& model, DependencyScope scope) {
  std::uint64_t n = 0;
  for_each_body(model, [&](const BodyStats& b) {
    for (const AccessSite& s : b.field_access_sites)
      if (s.counted && (scope == DependencyScope::All || s.cross_class)) ++n;
  });
  return n;
}

std::uint64_t count_method_invocations(const VariantModel& model, DependencyScope scope, bool new_as_invocation) {
  std::uint64_t n = 0;
  for_each_body(model, [&](const BodyStats& b) {
    for (const InvocationSite& s : b.invocation_sites)
      if (scope == DependencyScope::All || s.cross_class) ++n;
    if (new_as_invocation) {
      for (const ConstructorCallSite& s : b.constructor_calls)
        if (scope == DependencyScope::All || s.cross_class) ++n;
    }
  });
  return n;
}

MetricsVector compute_metrics(const VariantModel& model, const MetricsConfig& cfg) {
  MetricsVector v = count_declarations(model, cfg);
  for (const CompilationUnit& u : model.units) v[Metric::LOC] += u.loc;
  v[Metric::NOID] = v[Metric::NOP] + v[Metric::NOC] + v[Metric::NOA] + v[Metric::NOM];
  v[Metric::NOIR] = count_inheritance_relations(model, cfg.inheritance);
  v[Metric::NOAA] = count_attribute_accesses(model, cfg.scope);
  v[Metric::NOMI] = count_method_invocations(model, cfg.scope, cfg.new_as_invocation);
  return v;
}

}  // namespace iris
