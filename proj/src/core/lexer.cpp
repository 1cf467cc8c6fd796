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

#include "iris/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace iris {
namespace {

constexpr std::string_view kKeywords[] = {
    "abstract", "assert",     "boolean",   "break",     "byte",         "case",
    "catch",    "char",       "class",     "const",     "continue",     "default",
    "do",       "double",     "else",      "enum",      "extends",      "final",
    "finally",  "float",      "for",       "goto",      "if",           "implements",
    "import",   "instanceof", "int",       "interface", "long",         "native",
    "new",      "package",    "private",   "protected", "public",       "return",
    "short",    "static",     "strictfp",  "super",     "switch",       "synchronized",
    "this",     "throw",      "throws",    "transient", "try",          "void",
    "volatile", "while",      "true"};

// Longest first within each leading character.
constexpr std::string_view kOperators[] = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    "+=",   "-=",  "*=",  "/=", "&=", "|=", "^=", "%=", "<<", "(",  ")",  "{",
    "}",    "[",   "]",   ";",  ",",  ".",  "@",  "=",  "<",  "!",  "~",  "?",
    ":"};

constexpr std::string_view kSingleOps = "+-*/&|^%";

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool digit(unsigned char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    out.reserve(src_.size() / 4);
    for (;;) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      Token t = next();
      if (!out.empty()) out.back().adjacent_to_next = (last_end_ == token_start_);
      out.push_back(t);
      last_end_ = pos_;
    }
    Token eof;
    eof.kind = TokenKind::EndOfFile;
    eof.line = line_;
    eof.column = col();
    out.push_back(eof);
    return out;
  }

 private:
  std::uint32_t col() const { return static_cast<std::uint32_t>(pos_ - line_start_ + 1); }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  [[noreturn]] void fail(std::uint32_t line, std::uint32_t column, const std::string& msg) const {
    throw ParseError(line, column, msg);
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && peek(1) == '*') {
        std::uint32_t l = line_, cc = col();
        pos_ += 2;
        for (;;) {
          if (pos_ >= src_.size()) fail(l, cc, "unterminated block comment");
          if (src_[pos_] == '*' && peek(1) == '/') {
            pos_ += 2;
            break;
          }
          advance();
        }
      } else if (c == '\x1a' && pos_ + 1 == src_.size()) {
        ++pos_;  // trailing DOS EOF marker
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, std::size_t start, std::uint32_t line, std::uint32_t column) const {
    Token t;
    t.kind = kind;
    t.text = src_.substr(start, pos_ - start);
    t.line = line;
    t.column = column;
    return t;
  }

  Token next() {
    token_start_ = pos_;
    const std::size_t start = pos_;
    const std::uint32_t line = line_, column = col();
    const auto c = static_cast<unsigned char>(src_[pos_]);

    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_part(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      Token t = make(TokenKind::Identifier, start, line, column);
      if (is_java_keyword(t.text)) t.kind = TokenKind::Keyword;
      return t;
    }
    if (digit(c) || (c == '.' && digit(static_cast<unsigned char>(peek(1))))) {
      return number(start, line, column);
    }
    if (c == '"') {
      if (peek(1) == '"' && peek(2) == '"') return text_block(start, line, column);
      ++pos_;
      for (;;) {
        if (pos_ >= src_.size() || src_[pos_] == '\n') fail(line, column, "unterminated string literal");
        if (src_[pos_] == '\\') {
          pos_ += 2;
          continue;
        }
        if (src_[pos_] == '"') break;
        ++pos_;
      }
      ++pos_;
      return make(TokenKind::StringLiteral, start, line, column);
    }
    if (c == '\'') {
      ++pos_;
      for (;;) {
        if (pos_ >= src_.size() || src_[pos_] == '\n') fail(line, column, "unterminated char literal");
        if (src_[pos_] == '\\') {
          pos_ += 2;
          continue;
        }
        if (src_[pos_] == '\'') break;
        ++pos_;
      }
      ++pos_;
      return make(TokenKind::CharLiteral, start, line, column);
    }
    if (c == '>') {
      ++pos_;
      // '>=' is safe to join; '>>' and '>>=' are rebuilt by the parser.
      if (peek() == '=') ++pos_;
      return make(TokenKind::Operator, start, line, column);
    }
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        pos_ += op.size();
        return make(TokenKind::Operator, start, line, column);
      }
    }
    if (kSingleOps.find(static_cast<char>(c)) != std::string_view::npos) {
      ++pos_;
      return make(TokenKind::Operator, start, line, column);
    }
    fail(line, column, std::string("unexpected character '") + static_cast<char>(c) + "'");
  }

  Token number(std::size_t start, std::uint32_t line, std::uint32_t column) {
    bool is_float = false;
    if (src_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B')) {
      pos_ += 2;
      while (pos_ < src_.size() && (std::isxdigit(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_'))
        ++pos_;
      // hex floating point: 0x1.8p3
      if (peek() == '.') {
        is_float = true;
        ++pos_;
        while (pos_ < src_.size() && std::isxdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
      if (peek() == 'p' || peek() == 'P') {
        is_float = true;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        while (pos_ < src_.size() && digit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    } else {
      auto digits = [&] {
        while (pos_ < src_.size() && (digit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          ++pos_;
      };
      digits();
      if (peek() == '.' && digit(static_cast<unsigned char>(peek(1)))) {
        is_float = true;
        ++pos_;
        digits();
      } else if (peek() == '.' && !ident_start(static_cast<unsigned char>(peek(1))) && peek(1) != '.') {
        is_float = true;  // "1." is a double literal
        ++pos_;
      }
      if (peek() == 'e' || peek() == 'E') {
        is_float = true;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        digits();
      }
    }
    char s = peek();
    if (s == 'f' || s == 'F' || s == 'd' || s == 'D') {
      is_float = true;
      ++pos_;
    } else if (s == 'l' || s == 'L') {
      ++pos_;
    }
    return make(is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral, start, line, column);
  }

  Token text_block(std::size_t start, std::uint32_t line, std::uint32_t column) {
    pos_ += 3;
    for (;;) {
      if (pos_ >= src_.size()) fail(line, column, "unterminated text block");
      if (src_[pos_] == '\\') {
        advance();
        if (pos_ < src_.size()) advance();
        continue;
      }
      if (src_[pos_] == '"' && peek(1) == '"' && peek(2) == '"') {
        pos_ += 3;
        break;
      }
      advance();
    }
    return make(TokenKind::TextBlock, start, line, column);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  std::size_t token_start_ = 0;
  std::size_t last_end_ = static_cast<std::size_t>(-1);
  std::uint32_t line_ = 1;
};

}  // namespace

bool is_java_keyword(std::string_view word) {
  if (word == "false" || word == "null") return true;
  return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

std::vector<Token> tokenize(std::string_view source) {
  // A UTF-8 byte order mark is not part of the program text.
  if (source.size() >= 3 && source.substr(0, 3) == "\xEF\xBB\xBF") source.remove_prefix(3);
  return Lexer(source).run();
}

}  // namespace iris
