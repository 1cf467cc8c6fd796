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
#include <string>
#include <string_view>
#include <vector>

#include "iris/errors.hpp"

namespace iris {

enum class TokenKind : std::uint8_t {
  Identifier,
  Keyword,
  IntLiteral,
  FloatLiteral,
  CharLiteral,
  StringLiteral,
  TextBlock,
  Operator,
  EndOfFile,
};

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string_view text;
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  // True when the next token starts immediately after this one. The lexer
  // emits '>' one character at a time so that nested generics close
  // cleanly; the expression parser glues '>' '>' back into shifts.
  bool adjacent_to_next = false;

  bool is(std::string_view s) const {
    return (kind == TokenKind::Operator || kind == TokenKind::Keyword) && text == s;
  }
  bool is_identifier() const { return kind == TokenKind::Identifier; }
  bool is_eof() const { return kind == TokenKind::EndOfFile; }
};

/// Splits Java source into tokens, dropping whitespace and comments.
/// Contextual keywords (var, record, yield, sealed, permits, module) are
/// reported as identifiers; the parser decides from context.
/// Throws ParseError on an unterminated literal or comment.
std::vector<Token> tokenize(std::string_view source);

bool is_java_keyword(std::string_view word);

}  // namespace iris
