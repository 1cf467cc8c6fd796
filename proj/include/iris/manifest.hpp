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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "iris/date.hpp"
#include "iris/metrics.hpp"

namespace iris {

struct ReleaseEntry {
  std::string name;
  Date date;
  std::string path_as_written;
  std::filesystem::path path;  // resolved against the manifest's directory
};

struct Manifest {
  std::vector<ReleaseEntry> releases;  // authoritative release order
  MetricsConfig config;
};

/// Parses manifest JSON. Relative release paths are resolved against
/// `base_dir`. Throws InputError naming the 1-based entry on bad entries,
/// duplicate names and release paths that are not directories.
Manifest parse_manifest(std::string_view json_text, const std::filesystem::path& base_dir);

/// Reads and parses a manifest file. Throws InputError when it is missing.
Manifest load_manifest(const std::filesystem::path& file);

}  // namespace iris
