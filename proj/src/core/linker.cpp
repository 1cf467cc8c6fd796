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

#include "iris/linker.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <unordered_set>

namespace iris {

bool looks_like_type_name(std::string_view name) {
  if (name.empty() || name[0] < 'A' || name[0] > 'Z') return false;
  return std::any_of(name.begin() + 1, name.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

namespace {

struct TypeInfo {
  TypeDecl* decl = nullptr;
  const CompilationUnit* unit = nullptr;
  std::unordered_map<std::string_view, const FieldDecl*> fields;
  std::unordered_set<std::string_view> enum_constants;
  std::unordered_set<std::string_view> methods;
  std::vector<const TypeInfo*> model_supers;
  std::string superclass;  // target of `super`; empty for none
};

// Where a dotted name stands after each segment.
struct Segment {
  enum class Kind { Package, Type, Value };
  Kind kind = Kind::Value;
  std::string name;                  // package prefix, type name, or value type ("" = unknown)
  std::optional<std::string> owner;  // Value reached through a field: its declaring type
};

struct FieldHit {
  const TypeInfo* declaring = nullptr;
  std::string type_name;
};

bool is_array(std::string_view type) { return type.size() >= 2 && type.substr(type.size() - 2) == "[]"; }

class Linker {
 public:
  explicit Linker(VariantModel& model) : model_(model) {}

  void run() {
    index_types();
    resolve_supertypes();
    for (auto& info : all_) resolve_type_body(*info);
  }

 private:
  void index_types() {
    for (CompilationUnit& unit : model_.units) {
      if (unit.parse_error) {
        model_.diagnostics.push_back(*unit.parse_error);
        continue;
      }
      model_.packages.insert(unit.package_name);
      index_list(unit.types, unit);
    }
  }

  void index_list(std::vector<TypeDecl>& types, const CompilationUnit& unit) {
    for (TypeDecl& t : types) {
      auto info = std::make_unique<TypeInfo>();
      info->decl = &t;
      info->unit = &unit;
      for (const FieldDecl& f : t.fields) info->fields.emplace(f.name, &f);
      for (const std::string& c : t.enum_constants) info->enum_constants.insert(c);
      for (const MethodDecl& m : t.methods)
        if (!m.is_constructor) info->methods.insert(m.name);
      auto [it, inserted] = by_name_.try_emplace(t.qualified_name, info.get());
      if (!inserted) {
        model_.diagnostics.push_back(Diagnostic{Diagnostic::Kind::DuplicateType, unit.path, t.line, 0,
                                                "duplicate type " + t.qualified_name + " shadows an earlier declaration"});
        it->second = info.get();
      }
      model_.type_index[t.qualified_name] = &t;
      all_.push_back(std::move(info));
      index_list(t.nested, unit);
    }
  }

  void resolve_supertypes() {
    for (auto& info : all_) {
      TypeDecl& t = *info->decl;
      for (const SupertypeRef& s : t.supertypes) {
        std::optional<std::string> target = resolve_type(s.name, info.get(), /*inherited=*/false);
        std::string name = target ? *target : s.name;
        model_.inheritance_edges.push_back(InheritanceEdge{t.qualified_name, name, s.kind});
        if (target) info->model_supers.push_back(by_name_.at(*target));
        if (s.kind == EdgeKind::Extends && is_class_kind(t.kind) && info->superclass.empty())
          info->superclass = name;
      }
    }
  }

  const TypeInfo* enclosing(const TypeInfo* t) const {
    if (t->decl->enclosing.empty()) return nullptr;
    auto it = by_name_.find(t->decl->enclosing);
    return it == by_name_.end() ? nullptr : it->second;
  }

  const TypeInfo* model_type(std::string_view qname) const {
    auto it = by_name_.find(std::string(qname));
    return it == by_name_.end() ? nullptr : it->second;
  }

  // ---- type names ------------------------------------------------------------

  std::optional<std::string> member_type(const TypeInfo* t, std::string_view simple, bool inherited,
                                         std::unordered_set<const TypeInfo*>& seen) const {
    if (!seen.insert(t).second) return std::nullopt;
    std::string candidate = t->decl->qualified_name + "." + std::string(simple);
    if (by_name_.count(candidate)) return candidate;
    if (inherited) {
      for (const TypeInfo* s : t->model_supers)
        if (auto hit = member_type(s, simple, inherited, seen)) return hit;
    }
    return std::nullopt;
  }

  std::optional<std::string> resolve_simple_type(std::string_view simple, const TypeInfo* ctx, bool inherited) const {
    for (const TypeInfo* c = ctx; c; c = enclosing(c)) {
      if (c->decl->simple_name == simple) return c->decl->qualified_name;
      std::unordered_set<const TypeInfo*> seen;
      if (auto hit = member_type(c, simple, inherited, seen)) return hit;
    }
    const CompilationUnit& unit = *ctx->unit;
    for (const ImportDecl& imp : unit.imports) {
      if (imp.is_static || imp.on_demand) continue;
      const std::size_t dot = imp.name.rfind('.');
      std::string_view last = dot == std::string::npos ? std::string_view(imp.name)
                                                       : std::string_view(imp.name).substr(dot + 1);
      if (last == simple && by_name_.count(imp.name)) return imp.name;
    }
    std::string same_package = unit.package_name == kDefaultPackage
                                   ? std::string(simple)
                                   : unit.package_name + "." + std::string(simple);
    if (by_name_.count(same_package)) return same_package;
    for (const ImportDecl& imp : unit.imports) {
      if (imp.is_static || !imp.on_demand) continue;
      std::string candidate = imp.name + "." + std::string(simple);
      if (by_name_.count(candidate)) return candidate;
    }
    return std::nullopt;
  }

  // Qualified name of a type declared in the release, or nullopt.
  std::optional<std::string> resolve_type(const std::string& name, const TypeInfo* ctx, bool inherited = true) {
    if (name.empty() || is_array(name)) return std::nullopt;
    std::string key;
    if (inherited) {
      key = ctx->decl->qualified_name;
      key += '\n';
      key += name;
      if (auto it = type_cache_.find(key); it != type_cache_.end()) return it->second;
    }
    std::optional<std::string> result;
    const std::size_t dot = name.find('.');
    if (dot == std::string::npos) {
      result = resolve_simple_type(name, ctx, inherited);
    } else {
      if (auto head = resolve_simple_type(std::string_view(name).substr(0, dot), ctx, inherited)) {
        std::string candidate = *head + name.substr(dot);
        if (by_name_.count(candidate)) result = candidate;
      }
      if (!result && by_name_.count(name)) result = name;
    }
    if (inherited) type_cache_.emplace(std::move(key), result);
    return result;
  }

  // Resolved qualified name when in the release, otherwise the name as written.
  std::string type_ref(const std::string& name, const TypeInfo* ctx) {
    if (auto q = resolve_type(name, ctx)) return *q;
    return name;
  }

  // ---- members -----------------------------------------------------------------

  std::optional<FieldHit> find_field(const TypeInfo* t, std::string_view name,
                                     std::unordered_set<const TypeInfo*>& seen) const {
    if (!seen.insert(t).second) return std::nullopt;
    if (auto it = t->fields.find(name); it != t->fields.end()) return FieldHit{t, it->second->type_name};
    if (t->enum_constants.count(name)) return FieldHit{t, t->decl->qualified_name};
    for (const TypeInfo* s : t->model_supers)
      if (auto hit = find_field(s, name, seen)) return hit;
    return std::nullopt;
  }

  std::optional<FieldHit> find_field(const TypeInfo* t, std::string_view name) const {
    std::unordered_set<const TypeInfo*> seen;
    return find_field(t, name, seen);
  }

  const TypeInfo* find_method(const TypeInfo* t, std::string_view name, std::unordered_set<const TypeInfo*>& seen) const {
    if (!seen.insert(t).second) return nullptr;
    if (t->methods.count(name)) return t;
    for (const TypeInfo* s : t->model_supers)
      if (const TypeInfo* hit = find_method(s, name, seen)) return hit;
    return nullptr;
  }

  const TypeInfo* find_method(const TypeInfo* t, std::string_view name) const {
    std::unordered_set<const TypeInfo*> seen;
    return find_method(t, name, seen);
  }

  std::optional<FieldHit> field_in_scope(std::string_view name, const TypeInfo* ctx) const {
    for (const TypeInfo* c = ctx; c; c = enclosing(c))
      if (auto hit = find_field(c, name)) return hit;
    return std::nullopt;
  }

  Segment value_of_field(const FieldHit& hit) {
    return Segment{Segment::Kind::Value, type_ref(hit.type_name, hit.declaring), hit.declaring->decl->qualified_name};
  }

  // Field `name` selected on a value of type `value_type`.
  Segment select_field(const std::string& value_type, std::string_view name) {
    if (value_type.empty() || is_array(value_type)) return Segment{Segment::Kind::Value, {}, std::nullopt};
    if (const TypeInfo* t = model_type(value_type)) {
      if (auto hit = find_field(t, name)) return value_of_field(*hit);
      return Segment{Segment::Kind::Value, {}, std::nullopt};
    }
    return Segment{Segment::Kind::Value, {}, value_type};
  }

  std::optional<std::string> method_owner(const std::string& type, std::string_view name) const {
    if (type.empty() || is_array(type)) return std::nullopt;
    if (const TypeInfo* t = model_type(type)) {
      if (const TypeInfo* hit = find_method(t, name)) return hit->decl->qualified_name;
      return std::nullopt;
    }
    return type;
  }

  bool names_model_type_prefix(const std::vector<std::string>& dotted) const {
    std::string prefix;
    for (const std::string& s : dotted) {
      if (!prefix.empty()) prefix += '.';
      prefix += s;
      if (by_name_.count(prefix)) return true;
    }
    return false;
  }

  const std::vector<Segment>& classify(const std::vector<std::string>& dotted, const TypeInfo* ctx) {
    std::string key = ctx->decl->qualified_name;
    for (const std::string& s : dotted) {
      key += '\n';
      key += s;
    }
    if (auto it = chain_cache_.find(key); it != chain_cache_.end()) return it->second;

    std::vector<Segment> out;
    out.reserve(dotted.size());
    const std::string& head = dotted.front();
    if (auto hit = field_in_scope(head, ctx)) {
      out.push_back(value_of_field(*hit));
    } else if (auto t = resolve_type(head, ctx)) {
      out.push_back(Segment{Segment::Kind::Type, *t, std::nullopt});
    } else if (looks_like_type_name(head)) {
      out.push_back(Segment{Segment::Kind::Type, head, std::nullopt});
    } else {
      const bool later_type = std::any_of(dotted.begin() + 1, dotted.end(),
                                          [](const std::string& s) { return looks_like_type_name(s); });
      if (later_type || names_model_type_prefix(dotted)) {
        out.push_back(Segment{Segment::Kind::Package, head, std::nullopt});
      } else {
        out.push_back(Segment{Segment::Kind::Value, {}, std::nullopt});
      }
    }
    for (std::size_t i = 1; i < dotted.size(); ++i) {
      const Segment prev = out.back();
      const std::string& s = dotted[i];
      switch (prev.kind) {
        case Segment::Kind::Package: {
          std::string q = prev.name + "." + s;
          if (by_name_.count(q) || looks_like_type_name(s)) {
            out.push_back(Segment{Segment::Kind::Type, q, std::nullopt});
          } else {
            out.push_back(Segment{Segment::Kind::Package, q, std::nullopt});
          }
          break;
        }
        case Segment::Kind::Type: {
          if (const TypeInfo* t = model_type(prev.name)) {
            std::string nested = prev.name + "." + s;
            if (auto hit = find_field(t, s)) {
              out.push_back(value_of_field(*hit));
            } else if (by_name_.count(nested) || looks_like_type_name(s)) {
              out.push_back(Segment{Segment::Kind::Type, nested, std::nullopt});
            } else {
              out.push_back(Segment{Segment::Kind::Value, {}, std::nullopt});
            }
          } else if (looks_like_type_name(s)) {
            out.push_back(Segment{Segment::Kind::Type, prev.name + "." + s, std::nullopt});
          } else {
            out.push_back(Segment{Segment::Kind::Value, {}, prev.name});
          }
          break;
        }
        case Segment::Kind::Value:
          out.push_back(select_field(prev.name, s));
          break;
      }
    }
    return chain_cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  // State of a non-Name receiver after its base and field hops.
  Segment evaluate_base(const Receiver& r, const TypeInfo* ctx, std::size_t hops) {
    std::string type;
    switch (r.base) {
      case Receiver::Base::This:
        type = ctx->decl->qualified_name;
        break;
      case Receiver::Base::OuterThis:
        type = type_ref(r.type_name, ctx);
        break;
      case Receiver::Base::Super:
        type = r.type_name.empty() ? ctx->superclass : type_ref(r.type_name, ctx);
        break;
      case Receiver::Base::Typed:
        type = r.type_name.empty() ? std::string() : type_ref(r.type_name, ctx);
        break;
      default:
        break;
    }
    Segment state{Segment::Kind::Value, type, std::nullopt};
    for (std::size_t i = 0; i < hops && i < r.path.size(); ++i) state = select_field(state.name, r.path[i]);
    return state;
  }

  void set_cross(const std::optional<std::string>& owner, bool& cross, const TypeInfo* ctx) const {
    cross = !owner || *owner != ctx->decl->qualified_name;
  }

  void resolve_access(AccessSite& site, const TypeInfo* ctx) {
    if (site.form == AccessForm::SimpleName) {
      if (auto hit = field_in_scope(site.accessed_name, ctx)) {
        site.resolved_owner = hit->declaring->decl->qualified_name;
        site.counted = true;
      } else {
        site.resolved_owner.reset();
        site.counted = false;
      }
    } else if (site.receiver.base == Receiver::Base::Name && !site.receiver.dotted.empty() &&
               site.receiver.path.size() < site.receiver.dotted.size()) {
      const std::vector<Segment>& segs = classify(site.receiver.dotted, ctx);
      const Segment& me = segs[site.receiver.path.size()];
      site.counted = me.kind == Segment::Kind::Value;
      site.resolved_owner = site.counted ? me.owner : std::nullopt;
    } else {
      Segment recv = evaluate_base(site.receiver, ctx, site.receiver.path.size());
      Segment me = select_field(recv.name, site.accessed_name);
      site.counted = true;
      site.resolved_owner = me.owner;
    }
    set_cross(site.resolved_owner, site.cross_class, ctx);
  }

  void resolve_invocation(InvocationSite& site, const TypeInfo* ctx) {
    const Receiver& r = site.receiver;
    switch (r.base) {
      case Receiver::Base::None: {
        site.resolved_owner.reset();
        for (const TypeInfo* c = ctx; c; c = enclosing(c)) {
          if (const TypeInfo* hit = find_method(c, site.invoked_name)) {
            site.resolved_owner = hit->decl->qualified_name;
            break;
          }
        }
        break;
      }
      case Receiver::Base::Name: {
        const std::vector<std::string>& dotted = r.dotted.empty() ? r.path : r.dotted;
        Segment last = classify(dotted, ctx).back();
        for (std::size_t i = dotted.size(); i < r.path.size(); ++i) last = select_field(last.name, r.path[i]);
        if (last.kind == Segment::Kind::Type) {
          site.receiver_form = ReceiverForm::Type;
          site.resolved_owner = method_owner(last.name, site.invoked_name);
        } else if (last.kind == Segment::Kind::Value) {
          site.receiver_form = ReceiverForm::Expression;
          site.resolved_owner = method_owner(last.name, site.invoked_name);
        } else {
          site.receiver_form = ReceiverForm::Expression;
          site.resolved_owner.reset();
        }
        break;
      }
      default: {
        Segment recv = evaluate_base(r, ctx, r.path.size());
        site.resolved_owner = method_owner(recv.name, site.invoked_name);
        break;
      }
    }
    set_cross(site.resolved_owner, site.cross_class, ctx);
  }

  void resolve_constructor_call(ConstructorCallSite& site, const TypeInfo* ctx) {
    if (site.type_name == "this") {
      site.resolved_owner = ctx->decl->qualified_name;
    } else if (site.type_name == "super") {
      site.resolved_owner = ctx->superclass.empty() ? std::nullopt : std::optional<std::string>(ctx->superclass);
    } else {
      site.resolved_owner = type_ref(site.type_name, ctx);
    }
    set_cross(site.resolved_owner, site.cross_class, ctx);
  }

  void resolve_body(BodyStats& body, const TypeInfo* ctx) {
    for (AccessSite& s : body.field_access_sites) resolve_access(s, ctx);
    for (InvocationSite& s : body.invocation_sites) resolve_invocation(s, ctx);
    for (ConstructorCallSite& s : body.constructor_calls) resolve_constructor_call(s, ctx);
  }

  void resolve_type_body(const TypeInfo& info) {
    TypeDecl& t = *info.decl;
    resolve_body(t.initializer, &info);
    for (MethodDecl& m : t.methods)
      if (m.body) resolve_body(*m.body, &info);
  }

  VariantModel& model_;
  std::vector<std::unique_ptr<TypeInfo>> all_;
  std::unordered_map<std::string, TypeInfo*> by_name_;
  std::unordered_map<std::string, std::optional<std::string>> type_cache_;
  std::unordered_map<std::string, std::vector<Segment>> chain_cache_;
};

}  // namespace

VariantModel link_variant(std::vector<CompilationUnit> units, std::string release_name, Date release_date) {
  std::stable_sort(units.begin(), units.end(),
                   [](const CompilationUnit& a, const CompilationUnit& b) { return a.path < b.path; });
  VariantModel model;
  model.release_name = std::move(release_name);
  model.release_date = release_date;
  model.units = std::move(units);
  Linker(model).run();
  return model;
}

}  // namespace iris
