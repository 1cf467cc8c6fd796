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

#include "iris/model.hpp"
#include "iris/source.hpp"

namespace iris {

/// Parses one Java source file into its declaration tree.
///
/// Never throws on bad input. A file that fails to lex or parse comes back
/// with `parse_error` set, no types, no imports, the default package and
/// its line count intact, so it still contributes LOC.
///
/// Sites recorded in method bodies are syntactic. Owners, cross-class
/// flags and whether a bare name is a field are settled by link_variant.
CompilationUnit parse_unit(const SourceFile& file);

}  // namespace iris
