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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace iris {

/// Package name recorded for files without a package declaration.
inline constexpr std::string_view kDefaultPackage = "<default>";

struct SourceFile {
  std::string path;  // relative to the release root, '/' separated
  std::string text;
  std::string package_name{kDefaultPackage};
};

/// A problem with one file that did not stop the run.
struct Diagnostic {
  enum class Kind { SkippedFile, ParseError, DuplicateType };

  Kind kind = Kind::ParseError;
  std::string file;
  std::uint32_t line = 0;
  std::uint32_t column = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string_view to_string(Diagnostic::Kind kind);

struct ScanOptions {
  std::vector<std::string> include_globs{"**/*.java"};
  std::vector<std::string> exclude_globs;
};

struct ScanResult {
  std::vector<SourceFile> files;  // sorted by path
  std::vector<Diagnostic> skipped;
};

/// Glob match on '/'-separated relative paths. '*' and '?' stay within one
/// path segment, '**' spans segments ("**/" also matches zero segments).
bool glob_match(std::string_view pattern, std::string_view path);

/// Collects source files below `root`. Throws InputError when the root is
/// missing or not a directory; files that cannot be read or are not valid
/// UTF-8 land in `skipped`.
ScanResult scan_variant(const std::filesystem::path& root, const ScanOptions& options = {});

/// Physical lines holding at least one non-whitespace character outside
/// line and block comments.
std::size_t count_loc(std::string_view text);

}  // namespace iris
