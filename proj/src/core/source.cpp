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

#include "iris/source.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

#include "iris/errors.hpp"

namespace fs = std::filesystem;

namespace iris {

std::string_view to_string(Diagnostic::Kind kind) {
  switch (kind) {
    case Diagnostic::Kind::SkippedFile:
      return "skipped";
    case Diagnostic::Kind::ParseError:
      return "parse-error";
    case Diagnostic::Kind::DuplicateType:
      return "duplicate-type";
  }
  return "unknown";
}

namespace {

bool match_segment(std::string_view pat, std::string_view seg) {
  // classic wildcard match with backtracking on the last '*'
  std::size_t p = 0, s = 0, star = std::string_view::npos, mark = 0;
  while (s < seg.size()) {
    if (p < pat.size() && (pat[p] == '?' || pat[p] == seg[s])) {
      ++p;
      ++s;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = s;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t slash = s.find('/', start);
    out.push_back(s.substr(start, slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return out;
}

bool match_segments(const std::vector<std::string_view>& pat, std::size_t pi,
                    const std::vector<std::string_view>& path, std::size_t si) {
  if (pi == pat.size()) return si == path.size();
  if (pat[pi] == "**") {
    for (std::size_t k = si; k <= path.size(); ++k)
      if (match_segments(pat, pi + 1, path, k)) return true;
    return false;
  }
  if (si == path.size()) return false;
  return match_segment(pat[pi], path[si]) && match_segments(pat, pi + 1, path, si + 1);
}

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k)
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    i += extra + 1;
  }
  return true;
}

bool any_match(const std::vector<std::string>& globs, std::string_view path) {
  return std::any_of(globs.begin(), globs.end(),
                     [&](const std::string& g) { return glob_match(g, path); });
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
  return match_segments(split(pattern), 0, split(path), 0);
}

ScanResult scan_variant(const fs::path& root, const ScanOptions& options) {
  std::error_code ec;
  if (!fs::exists(root, ec) || ec) throw InputError("release directory does not exist: " + root.string());
  if (!fs::is_directory(root, ec)) throw InputError("release path is not a directory: " + root.string());

  ScanResult result;
  std::vector<std::pair<std::string, fs::path>> candidates;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw InputError("cannot read release directory " + root.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (!entry.is_regular_file(ec)) continue;
    std::string rel = fs::relative(entry.path(), root, ec).generic_string();
    if (ec) continue;
    if (!any_match(options.include_globs, rel) || any_match(options.exclude_globs, rel)) continue;
    candidates.emplace_back(std::move(rel), entry.path());
  }
  std::sort(candidates.begin(), candidates.end());

  for (auto& [rel, full] : candidates) {
    std::ifstream in(full, std::ios::binary);
    std::ostringstream buf;
    if (in) buf << in.rdbuf();
    if (!in) {
      result.skipped.push_back({Diagnostic::Kind::SkippedFile, rel, 0, 0, "cannot read file"});
      continue;
    }
    std::string text = std::move(buf).str();
    if (!valid_utf8(text)) {
      result.skipped.push_back({Diagnostic::Kind::SkippedFile, rel, 0, 0, "file is not valid UTF-8"});
      continue;
    }
    result.files.push_back(SourceFile{rel, std::move(text), std::string(kDefaultPackage)});
  }
  return result;
}

std::size_t count_loc(std::string_view text) {
  enum class State { Code, LineComment, BlockComment, String, Char, TextBlock };
  State state = State::Code;
  std::size_t lines = 0;
  bool line_has_code = false;
  const std::size_t n = text.size();

  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c == '\n') {
      if (line_has_code) ++lines;
      line_has_code = false;
      if (state == State::LineComment) state = State::Code;
      // an unterminated string or char literal ends at the line break
      if (state == State::String || state == State::Char) state = State::Code;
      continue;
    }
    const bool blank = c == ' ' || c == '\t' || c == '\r' || c == '\f';
    switch (state) {
      case State::Code:
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
          state = State::LineComment;
          ++i;
        } else if (c == '/' && i + 1 < n && text[i + 1] == '*') {
          state = State::BlockComment;
          ++i;
        } else if (!blank) {
          line_has_code = true;
          if (c == '"') {
            if (text.substr(i, 3) == "\"\"\"") {
              state = State::TextBlock;
              i += 2;
            } else {
              state = State::String;
            }
          } else if (c == '\'') {
            state = State::Char;
          }
        }
        break;
      case State::LineComment:
        break;
      case State::BlockComment:
        if (c == '*' && i + 1 < n && text[i + 1] == '/') {
          state = State::Code;
          ++i;
        }
        break;
      case State::String:
      case State::Char:
        line_has_code = true;
        if (c == '\\') {
          if (i + 1 < n && text[i + 1] != '\n') ++i;
        } else if ((state == State::String && c == '"') || (state == State::Char && c == '\'')) {
          state = State::Code;
        }
        break;
      case State::TextBlock:
        if (!blank) line_has_code = true;
        if (c == '\\') {
          if (i + 1 < n && text[i + 1] != '\n') ++i;
        } else if (text.substr(i, 3) == "\"\"\"") {
          state = State::Code;
          i += 2;
        }
        break;
    }
  }
  if (line_has_code) ++lines;
  return lines;
}

}  // namespace iris
