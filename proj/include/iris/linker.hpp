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

#pragma once

#include <string>
#include <vector>

#include "iris/date.hpp"
#include "iris/model.hpp"

namespace iris {

/// Links the parsed units of one release.
///
/// Units are sorted by path first, so the result does not depend on the
/// order they were parsed in. Every declared supertype becomes one edge,
/// including supertypes outside the release. Each access and invocation
/// site is resolved by, in order: the receiver's declared type; members of
/// the enclosing class, its lexically enclosing classes and their
/// supertypes declared in the release; same-package types; imports.
/// Anything else stays unresolved and counts as cross-class.
///
/// A qualified type name declared twice keeps the later declaration in
/// `type_index` and records a DuplicateType diagnostic. Units that failed to
/// parse contribute no package.
VariantModel link_variant(std::vector<CompilationUnit> units, std::string release_name, Date release_date);

/// Heuristic used for names outside the release: a leading capital followed
/// somewhere by a lower-case letter ("List", "HashMap"), which keeps
/// constants such as MAX_VALUE out.
bool looks_like_type_name(std::string_view name);

}  // namespace iris
