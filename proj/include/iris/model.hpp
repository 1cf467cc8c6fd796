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

// Declaration trees for one release and the linked per-release model.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "iris/date.hpp"
#include "iris/source.hpp"

namespace iris {

enum class TypeKind : std::uint8_t { Class, Interface, Enum, Record, Annotation };

std::string_view to_string(TypeKind kind);

/// enum and record count as classes, annotation types as interfaces.
inline bool is_class_kind(TypeKind k) {
  return k == TypeKind::Class || k == TypeKind::Enum || k == TypeKind::Record;
}
inline bool is_interface_kind(TypeKind k) {
  return k == TypeKind::Interface || k == TypeKind::Annotation;
}

enum class Modifier : std::uint8_t {
  Public,
  Protected,
  Private,
  Static,
  Abstract,
  Final,
  Native,
  Synchronized,
  Transient,
  Volatile,
  Strictfp,
  Default,
  Sealed,
  NonSealed,
};

std::optional<Modifier> modifier_from_keyword(std::string_view word);

class ModifierSet {
 public:
  ModifierSet() = default;
  ModifierSet(std::initializer_list<Modifier> mods) {
    for (Modifier m : mods) add(m);
  }

  void add(Modifier m) { bits_ |= bit(m); }
  bool has(Modifier m) const { return (bits_ & bit(m)) != 0; }
  bool empty() const { return bits_ == 0; }

  friend bool operator==(const ModifierSet&, const ModifierSet&) = default;

 private:
  static std::uint16_t bit(Modifier m) { return static_cast<std::uint16_t>(1u << static_cast<unsigned>(m)); }
  std::uint16_t bits_ = 0;
};

/// What an access or call is selected on, as far as syntax tells.
struct Receiver {
  enum class Base : std::uint8_t {
    None,        // bare name: x, foo()
    This,        // this.x
    Super,       // super.x
    OuterThis,   // Outer.this.x; type_name = Outer
    Name,        // a.b.x where `a` is not a local; path = [a, b]
    Typed,       // local variable, cast or `new` result; type_name known
    Expression,  // anything else: call results, array elements, literals
  };

  Base base = Base::None;
  std::string type_name;          // erased, dotted as written; "[]" suffix for arrays
  std::vector<std::string> path;  // Name: dotted prefix before the site; otherwise field hops after the base
  std::vector<std::string> dotted;  // Name: every segment of the enclosing dotted name

  friend bool operator==(const Receiver&, const Receiver&) = default;
};

enum class AccessForm : std::uint8_t { Qualified, ThisQualified, SimpleName };
enum class ReceiverForm : std::uint8_t { None, This, Expression, Type };

std::string_view to_string(AccessForm form);
std::string_view to_string(ReceiverForm form);

struct AccessSite {
  std::string accessed_name;
  AccessForm form = AccessForm::SimpleName;
  Receiver receiver;
  std::uint32_t line = 0;
  // Filled by link_variant.
  std::optional<std::string> resolved_owner;
  bool cross_class = false;
  // A site counts toward attribute accesses. Simple names count only when
  // they resolve to a field; segments of a package path never count.
  bool counted = false;

  friend bool operator==(const AccessSite&, const AccessSite&) = default;
};

struct InvocationSite {
  std::string invoked_name;
  ReceiverForm receiver_form = ReceiverForm::None;
  Receiver receiver;
  std::uint32_t line = 0;
  std::optional<std::string> resolved_owner;
  bool cross_class = false;

  friend bool operator==(const InvocationSite&, const InvocationSite&) = default;
};

/// `new T(...)`, `this(...)` and `super(...)`. Kept apart from method
/// invocations; MetricsConfig decides whether they count as invocations.
struct ConstructorCallSite {
  std::string type_name;  // "this" / "super" for explicit constructor calls
  std::uint32_t line = 0;
  std::optional<std::string> resolved_owner;
  bool cross_class = false;

  friend bool operator==(const ConstructorCallSite&, const ConstructorCallSite&) = default;
};

struct BodyStats {
  std::size_t local_var_decls = 0;
  std::vector<AccessSite> field_access_sites;
  std::vector<InvocationSite> invocation_sites;
  std::vector<ConstructorCallSite> constructor_calls;

  friend bool operator==(const BodyStats&, const BodyStats&) = default;
};

struct FieldDecl {
  std::string name;
  std::string owner;  // qualified name of the declaring type
  ModifierSet modifiers;
  std::string type_name;
  std::uint32_t line = 0;

  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct MethodDecl {
  std::string name;
  std::string owner;
  bool is_constructor = false;
  ModifierSet modifiers;
  std::size_t param_count = 0;
  std::string return_type;  // empty for constructors
  std::optional<BodyStats> body;
  std::uint32_t line = 0;

  friend bool operator==(const MethodDecl&, const MethodDecl&) = default;
};

enum class EdgeKind : std::uint8_t { Extends, Implements };

std::string_view to_string(EdgeKind kind);

struct SupertypeRef {
  std::string name;  // erased, dotted as written
  EdgeKind kind = EdgeKind::Extends;

  friend bool operator==(const SupertypeRef&, const SupertypeRef&) = default;
};

struct TypeDecl {
  std::string simple_name;
  std::string qualified_name;
  TypeKind kind = TypeKind::Class;
  ModifierSet modifiers;
  std::vector<SupertypeRef> supertypes;  // extends first, then implements
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  std::vector<TypeDecl> nested;  // member types and local classes
  std::vector<std::string> enum_constants;
  std::size_t anonymous_bodies = 0;
  // Field initializers, initializer blocks and enum constant arguments.
  BodyStats initializer;
  std::string enclosing;  // qualified name of the lexically enclosing type
  std::uint32_t line = 0;

  friend bool operator==(const TypeDecl&, const TypeDecl&) = default;
};

struct ImportDecl {
  std::string name;  // without the trailing ".*"
  bool is_static = false;
  bool on_demand = false;

  friend bool operator==(const ImportDecl&, const ImportDecl&) = default;
};

struct CompilationUnit {
  std::string path;
  std::string package_name{kDefaultPackage};
  std::vector<ImportDecl> imports;
  std::vector<TypeDecl> types;
  std::size_t loc = 0;
  std::optional<Diagnostic> parse_error;

  friend bool operator==(const CompilationUnit&, const CompilationUnit&) = default;
};

struct InheritanceEdge {
  std::string subtype;
  std::string supertype;  // resolved qualified name, or the name as written if external
  EdgeKind kind = EdgeKind::Extends;

  friend bool operator==(const InheritanceEdge&, const InheritanceEdge&) = default;
};

/// Linked model of one release. Holds pointers into its own units, so it
/// moves but does not copy.
struct VariantModel {
  std::string release_name;
  Date release_date;
  std::vector<CompilationUnit> units;
  std::set<std::string> packages;
  std::map<std::string, const TypeDecl*> type_index;
  std::vector<InheritanceEdge> inheritance_edges;
  std::vector<Diagnostic> diagnostics;

  VariantModel() = default;
  VariantModel(VariantModel&&) noexcept = default;
  VariantModel& operator=(VariantModel&&) noexcept = default;
  VariantModel(const VariantModel&) = delete;
  VariantModel& operator=(const VariantModel&) = delete;

  const TypeDecl* find_type(std::string_view qualified_name) const;
};

/// Calls fn(const TypeDecl&) for every named type, depth first in
/// declaration order.
template <typename Fn>
void for_each_type(const std::vector<TypeDecl>& types, Fn&& fn) {
  for (const TypeDecl& t : types) {
    fn(t);
    for_each_type(t.nested, fn);
  }
}

template <typename Fn>
void for_each_type(const VariantModel& model, Fn&& fn) {
  for (const CompilationUnit& u : model.units) for_each_type(u.types, fn);
}

}  // namespace iris
