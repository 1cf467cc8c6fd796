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

#include "iris/model.hpp"

namespace iris {

std::string_view to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::Class:
      return "class";
    case TypeKind::Interface:
      return "interface";
    case TypeKind::Enum:
      return "enum";
    case TypeKind::Record:
      return "record";
    case TypeKind::Annotation:
      return "annotation";
  }
  return "class";
}

std::string_view to_string(AccessForm form) {
  switch (form) {
    case AccessForm::Qualified:
      return "qualified";
    case AccessForm::ThisQualified:
      return "this-qualified";
    case AccessForm::SimpleName:
      return "simple-name";
  }
  return "qualified";
}

std::string_view to_string(ReceiverForm form) {
  switch (form) {
    case ReceiverForm::None:
      return "none";
    case ReceiverForm::This:
      return "this";
    case ReceiverForm::Expression:
      return "expression";
    case ReceiverForm::Type:
      return "type";
  }
  return "none";
}

std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::Extends ? "extends" : "implements";
}

std::optional<Modifier> modifier_from_keyword(std::string_view word) {
  static constexpr std::pair<std::string_view, Modifier> kTable[] = {
      {"public", Modifier::Public},       {"protected", Modifier::Protected},
      {"private", Modifier::Private},     {"static", Modifier::Static},
      {"abstract", Modifier::Abstract},   {"final", Modifier::Final},
      {"native", Modifier::Native},       {"synchronized", Modifier::Synchronized},
      {"transient", Modifier::Transient}, {"volatile", Modifier::Volatile},
      {"strictfp", Modifier::Strictfp},   {"default", Modifier::Default},
  };
  for (const auto& [kw, mod] : kTable)
    if (kw == word) return mod;
  return std::nullopt;
}

const TypeDecl* VariantModel::find_type(std::string_view qualified_name) const {
  auto it = type_index.find(std::string(qualified_name));
  return it == type_index.end() ? nullptr : it->second;
}

}  // namespace iris
