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

#include "iris/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "iris/errors.hpp"

namespace iris {

namespace {

using nlohmann::json;

[[noreturn]] void entry_error(std::size_t index, const std::string& what) {
  throw InputError("manifest entry " + std::to_string(index) + ": " + what);
}

std::string required_string(const json& entry, const char* key, std::size_t index) {
  auto it = entry.find(key);
  if (it == entry.end()) entry_error(index, std::string("missing \"") + key + "\"");
  if (!it->is_string()) entry_error(index, std::string("\"") + key + "\" must be a string");
  return it->get<std::string>();
}

MetricsConfig parse_config(const json& cfg) {
  MetricsConfig out;
  if (!cfg.is_object()) throw InputError("manifest config: must be an object");
  for (const auto& [key, value] : cfg.items()) {
    if (key == "inheritance") {
      auto mode = value.is_string() ? inheritance_mode_from_string(value.get<std::string>()) : std::nullopt;
      if (!mode) throw InputError("manifest config: \"inheritance\" must be \"all\" or \"extends-only\"");
      out.inheritance = *mode;
    } else if (key == "scope") {
      auto scope = value.is_string() ? dependency_scope_from_string(value.get<std::string>()) : std::nullopt;
      if (!scope) throw InputError("manifest config: \"scope\" must be \"all\" or \"cross-class\"");
      out.scope = *scope;
    } else if (key == "constructors") {
      std::string s = value.is_string() ? value.get<std::string>() : "";
      if (s != "include" && s != "exclude")
        throw InputError("manifest config: \"constructors\" must be \"include\" or \"exclude\"");
      out.include_constructors = s == "include";
    } else if (key == "newAsInvocation") {
      if (!value.is_boolean()) throw InputError("manifest config: \"newAsInvocation\" must be a boolean");
      out.new_as_invocation = value.get<bool>();
    } else {
      throw InputError("manifest config: unknown key \"" + key + "\"");
    }
  }
  return out;
}

}  // namespace

Manifest parse_manifest(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("manifest must be a JSON object");
  auto releases = doc.find("releases");
  if (releases == doc.end() || !releases->is_array()) throw InputError("manifest needs a \"releases\" array");
  if (releases->empty()) throw InputError("manifest lists no releases");

  Manifest m;
  if (auto cfg = doc.find("config"); cfg != doc.end()) m.config = parse_config(*cfg);

  std::set<std::string> names;
  std::size_t index = 0;
  for (const json& entry : *releases) {
    ++index;
    if (!entry.is_object()) entry_error(index, "must be an object");
    ReleaseEntry r;
    r.name = required_string(entry, "name", index);
    if (r.name.empty()) entry_error(index, "empty release name");
    if (!names.insert(r.name).second) entry_error(index, "duplicate release name \"" + r.name + "\"");
    const std::string date = required_string(entry, "date", index);
    auto parsed = Date::parse_iso(date);
    if (!parsed) entry_error(index, "date \"" + date + "\" is not a valid YYYY-MM-DD date");
    r.date = *parsed;
    r.path_as_written = required_string(entry, "path", index);
    std::filesystem::path p(r.path_as_written);
    r.path = p.is_absolute() ? p : base_dir / p;
    std::error_code ec;
    if (!std::filesystem::is_directory(r.path, ec))
      entry_error(index, "release path \"" + r.path_as_written + "\" is not a directory");
    m.releases.push_back(std::move(r));
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError("cannot read manifest " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str(), file.parent_path());
}

}  // namespace iris
