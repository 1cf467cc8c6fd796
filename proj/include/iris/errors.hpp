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
#include <stdexcept>
#include <string>

namespace iris {

/// Bad or missing user input: manifest, release directory, matrix file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Too few releases for an operation that compares releases.
class InsufficientReleasesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::uint32_t line, std::uint32_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::uint32_t line() const noexcept { return line_; }
  std::uint32_t column() const noexcept { return column_; }

 private:
  std::uint32_t line_;
  std::uint32_t column_;
};

/// Strict-mode failure: at least one source file did not parse.
class StrictParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace iris
