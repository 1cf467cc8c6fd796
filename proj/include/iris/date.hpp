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

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace iris {

/// Calendar date. Zero-initialized means "unknown".
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  bool known() const { return year != 0; }

  /// Strict YYYY-MM-DD with a real calendar day.
  static std::optional<Date> parse_iso(std::string_view text);

  /// YYYY-MM-DD, or the empty string for an unknown date.
  std::string iso() const;

  friend auto operator<=>(const Date&, const Date&) = default;
};

}  // namespace iris
