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

// Recursive-descent parser for Java syntax. It keeps the declaration tree
// and, inside bodies, only what the metrics need: local declarators, field
// selections, bare names that might be fields, and call sites. Everything
// else is consumed and dropped.

#include "iris/parser.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

#include "iris/errors.hpp"
#include "iris/lexer.hpp"

namespace iris {
namespace {

constexpr std::string_view kPrimitives[] = {"boolean", "byte", "char",   "short", "int",
                                            "long",    "float", "double", "void"};

bool is_primitive(std::string_view s) {
  return std::find(std::begin(kPrimitives), std::end(kPrimitives), s) != std::end(kPrimitives);
}

struct TypeName {
  std::string name;
  int dims = 0;
  bool primitive = false;

  std::string text(int extra_dims = 0) const {
    std::string out = name;
    for (int i = 0; i < dims + extra_dims; ++i) out += "[]";
    return out;
  }
};

std::string join(const std::vector<std::string>& segs) {
  std::string out;
  for (const auto& s : segs) {
    if (!out.empty()) out += '.';
    out += s;
  }
  return out;
}

bool is_assignment_op(std::string_view op) {
  return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" || op == "%=" ||
         op == "&=" || op == "|=" || op == "^=" || op == "<<=" || op == ">>=" || op == ">>>=";
}

int binary_precedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return 0;
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, CompilationUnit& unit) : t_(tokens), unit_(unit) {}

  void parse_compilation_unit() {
    std::size_t save = pos_;
    parse_modifiers();  // package annotations (package-info.java)
    if (accept("package")) {
      unit_.package_name = qualified_identifier();
      expect(";");
    } else {
      pos_ = save;
    }
    while (is("import")) {
      ++pos_;
      ImportDecl imp;
      imp.is_static = accept("static");
      imp.name = expect_identifier();
      while (accept(".")) {
        if (accept("*")) {
          imp.on_demand = true;
          break;
        }
        imp.name += '.';
        imp.name += expect_identifier();
      }
      expect(";");
      unit_.imports.push_back(std::move(imp));
    }
    while (!cur().is_eof()) {
      if (accept(";")) continue;
      if (is_module_declaration()) {
        // module-info.java declares no types
        pos_ = t_.size() - 1;
        break;
      }
      ModifierSet mods = parse_modifiers();
      if (!type_declaration_ahead()) fail("expected a type declaration");
      unit_.types.push_back(parse_type_declaration(mods, ""));
    }
  }

 private:
  using Scope = std::vector<std::pair<std::string_view, std::string>>;

  // ---- token helpers -------------------------------------------------------

  const Token& cur() const { return t_[pos_]; }
  const Token& at(std::size_t k) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
  bool is(std::string_view s) const { return cur().is(s); }
  bool accept(std::string_view s) {
    if (!is(s)) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  std::string_view expect_identifier() {
    if (!cur().is_identifier()) fail("expected identifier");
    return t_[pos_++].text;
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& tk = cur();
    std::string near = tk.is_eof() ? std::string("end of file") : "'" + std::string(tk.text) + "'";
    throw ParseError(tk.line, tk.column, message + " near " + near);
  }

  std::string qualified_identifier() {
    std::string name(expect_identifier());
    while (is(".") && at(1).is_identifier()) {
      pos_ += 2;
      name += '.';
      name += t_[pos_ - 1].text;
    }
    return name;
  }

  // Glues the one-character '>' tokens back into shift operators.
  std::pair<std::string_view, std::size_t> peek_operator() const {
    const Token& a = cur();
    if (a.kind != TokenKind::Operator) {
      if (a.is("instanceof")) return {"instanceof", 1};
      return {{}, 0};
    }
    if (a.text == ">" && a.adjacent_to_next) {
      const Token& b = at(1);
      if (b.text == ">=") return {">>=", 2};
      if (b.text == ">" && b.adjacent_to_next) {
        const Token& c = at(2);
        if (c.text == ">=") return {">>>=", 3};
        if (c.text == ">") return {">>>", 3};
      }
      if (b.text == ">") return {">>", 2};
    }
    return {a.text, 1};
  }

  std::size_t matching_close(std::size_t open) const {
    std::string_view o = t_[open].text;
    std::string_view c = o == "(" ? ")" : o == "[" ? "]" : "}";
    int depth = 0;
    for (std::size_t i = open; i < t_.size(); ++i) {
      if (t_[i].kind != TokenKind::Operator) continue;
      if (t_[i].text == o) ++depth;
      else if (t_[i].text == c && --depth == 0) return i;
    }
    return 0;
  }

  void skip_balanced() {
    std::size_t close = matching_close(pos_);
    if (close == 0) fail("unbalanced '" + std::string(cur().text) + "'");
    pos_ = close + 1;
  }

  void skip_annotation() {
    ++pos_;  // '@'
    qualified_identifier();
    if (is("(")) skip_balanced();
  }

  void skip_annotations() {
    while (is("@") && !at(1).is("interface")) skip_annotation();
  }

  // ---- scopes ----------------------------------------------------------------

  void push_scope() { scopes_.emplace_back(); }
  void pop_scope() { scopes_.pop_back(); }
  void declare(std::string_view name, std::string type) {
    if (scopes_.empty()) push_scope();
    scopes_.back().emplace_back(name, std::move(type));
  }
  const std::string* lookup_local(std::string_view name) const {
    for (auto s = scopes_.rbegin(); s != scopes_.rend(); ++s)
      for (auto v = s->rbegin(); v != s->rend(); ++v)
        if (v->first == name) return &v->second;
    return nullptr;
  }

  // ---- modifiers and types ---------------------------------------------------

  bool declaration_keyword_at(std::size_t k) const {
    const Token& tk = at(k);
    if (tk.is("class") || tk.is("interface") || tk.is("enum") || tk.is("@")) return true;
    if (tk.kind == TokenKind::Keyword && modifier_from_keyword(tk.text)) return true;
    return tk.is_identifier() && (tk.text == "record" || tk.text == "sealed" || tk.text == "non");
  }

  ModifierSet parse_modifiers() {
    ModifierSet mods;
    for (;;) {
      if (is("@") && !at(1).is("interface")) {
        skip_annotation();
        continue;
      }
      if (cur().kind == TokenKind::Keyword) {
        if (auto m = modifier_from_keyword(cur().text)) {
          // `default:` and `default ->` in switches are labels, not modifiers
          if (*m == Modifier::Default && (at(1).is(":") || at(1).is("->"))) break;
          mods.add(*m);
          ++pos_;
          continue;
        }
      }
      if (cur().is_identifier()) {
        if (cur().text == "sealed" && declaration_keyword_at(1)) {
          mods.add(Modifier::Sealed);
          ++pos_;
          continue;
        }
        if (cur().text == "non" && at(1).is("-") && at(2).text == "sealed") {
          mods.add(Modifier::NonSealed);
          pos_ += 3;
          continue;
        }
      }
      break;
    }
    return mods;
  }

  bool type_declaration_ahead() const {
    if (is("class") || is("interface") || is("enum")) return true;
    if (is("@") && at(1).is("interface")) return true;
    return cur().is_identifier() && cur().text == "record" && at(1).is_identifier() &&
           (at(2).is("(") || at(2).is("<"));
  }

  bool is_module_declaration() const {
    if (!cur().is_identifier()) return false;
    if (cur().text == "open" && at(1).is_identifier() && at(1).text == "module") return true;
    return cur().text == "module" && at(1).is_identifier();
  }

  // Non-throwing type scan; the caller restores pos_ on failure.
  bool scan_type(TypeName& out, bool allow_dims = true) {
    skip_annotations_quiet();
    const Token& tk = cur();
    if (tk.kind == TokenKind::Keyword && is_primitive(tk.text)) {
      out.name = std::string(tk.text);
      out.primitive = true;
      ++pos_;
    } else if (tk.is_identifier()) {
      out.name = std::string(tk.text);
      ++pos_;
      if (is("<") && !scan_type_arguments()) return false;
      while (is(".") && (at(1).is_identifier() || at(1).is("@"))) {
        ++pos_;
        skip_annotations_quiet();
        if (!cur().is_identifier()) return false;
        out.name += '.';
        out.name += cur().text;
        ++pos_;
        if (is("<") && !scan_type_arguments()) return false;
      }
    } else {
      return false;
    }
    if (allow_dims) {
      for (;;) {
        std::size_t save = pos_;
        skip_annotations_quiet();
        if (is("[") && at(1).is("]")) {
          pos_ += 2;
          ++out.dims;
        } else {
          pos_ = save;
          break;
        }
      }
    }
    return true;
  }

  void skip_annotations_quiet() {
    while (is("@") && !at(1).is("interface")) {
      ++pos_;
      while (cur().is_identifier() || is(".")) ++pos_;
      if (is("(")) {
        std::size_t close = matching_close(pos_);
        if (close == 0) return;
        pos_ = close + 1;
      }
    }
  }

  bool scan_type_arguments() {
    ++pos_;  // '<'
    if (accept(">")) return true;  // diamond
    for (;;) {
      skip_annotations_quiet();
      if (accept("?")) {
        if (accept("extends") || accept("super")) {
          TypeName bound;
          if (!scan_type(bound)) return false;
          while (accept("&")) {
            if (!scan_type(bound)) return false;
          }
        }
      } else {
        TypeName arg;
        if (!scan_type(arg)) return false;
      }
      if (accept(",")) continue;
      return accept(">");
    }
  }

  void parse_type_parameters() {
    ++pos_;  // '<'
    for (;;) {
      skip_annotations();
      expect_identifier();
      if (accept("extends")) {
        parse_type();
        while (accept("&")) parse_type();
      }
      if (!accept(",")) break;
    }
    expect(">");
  }

  TypeName parse_type(bool allow_dims = true) {
    TypeName tn;
    if (!scan_type(tn, allow_dims)) fail("expected a type");
    return tn;
  }

  // ---- declarations ------------------------------------------------------------

  std::string qualify(const std::string& enclosing, std::string_view simple) const {
    if (!enclosing.empty()) return enclosing + "." + std::string(simple);
    if (unit_.package_name == kDefaultPackage) return std::string(simple);
    return unit_.package_name + "." + std::string(simple);
  }

  static bool is_root_object(const std::string& name) {
    return name == "Object" || name == "java.lang.Object";
  }

  TypeDecl parse_type_declaration(ModifierSet mods, const std::string& enclosing) {
    TypeDecl t;
    t.modifiers = mods;
    t.line = cur().line;
    if (accept("class")) {
      t.kind = TypeKind::Class;
    } else if (accept("interface")) {
      t.kind = TypeKind::Interface;
    } else if (accept("enum")) {
      t.kind = TypeKind::Enum;
    } else if (is("@") && at(1).is("interface")) {
      pos_ += 2;
      t.kind = TypeKind::Annotation;
    } else if (cur().is_identifier() && cur().text == "record") {
      ++pos_;
      t.kind = TypeKind::Record;
    } else {
      fail("expected a type declaration");
    }
    t.simple_name = std::string(expect_identifier());
    t.qualified_name = qualify(enclosing, t.simple_name);
    t.enclosing = enclosing;
    if (is("<")) parse_type_parameters();

    if (t.kind == TypeKind::Record) {
      expect("(");
      while (!is(")")) {
        ModifierSet component_mods = parse_modifiers();
        TypeName tn = parse_type();
        if (accept("...")) ++tn.dims;
        std::string_view name = expect_identifier();
        t.fields.push_back(FieldDecl{std::string(name), t.qualified_name, component_mods, tn.text(), t.line});
        if (!accept(",")) break;
      }
      expect(")");
    }
    if (accept("extends")) {
      do {
        TypeName tn = parse_type(false);
        if (!is_root_object(tn.name)) t.supertypes.push_back({tn.name, EdgeKind::Extends});
      } while (accept(","));
    }
    if (accept("implements")) {
      do {
        TypeName tn = parse_type(false);
        t.supertypes.push_back({tn.name, EdgeKind::Implements});
      } while (accept(","));
    }
    if (cur().is_identifier() && cur().text == "permits") {
      ++pos_;
      do {
        parse_type(false);
      } while (accept(","));
    }

    TypeDecl* saved_type = current_type_;
    BodyStats* saved_sink = sink_;
    current_type_ = &t;
    if (t.kind == TypeKind::Enum) {
      parse_enum_body(t);
    } else {
      expect("{");
      while (!accept("}")) {
        if (cur().is_eof()) fail("unterminated type body");
        parse_member(&t);
      }
    }
    current_type_ = saved_type;
    sink_ = saved_sink;
    return t;
  }

  void parse_enum_body(TypeDecl& t) {
    expect("{");
    while (!is(";") && !is("}")) {
      skip_annotations();
      t.enum_constants.emplace_back(expect_identifier());
      BodyStats* saved = sink_;
      sink_ = &t.initializer;
      if (is("(")) parse_arguments();
      if (is("{")) parse_anonymous_body();
      sink_ = saved;
      if (!accept(",")) break;
    }
    if (accept(";")) {
      while (!accept("}")) {
        if (cur().is_eof()) fail("unterminated enum body");
        parse_member(&t);
      }
    } else {
      expect("}");
    }
  }

  // `type` is null inside anonymous class bodies: members there are not part
  // of any named type and their code is charged to the enclosing body.
  void parse_member(TypeDecl* type) {
    if (accept(";")) return;
    if (is("{") || (is("static") && at(1).is("{"))) {
      accept("static");
      BodyStats* saved = sink_;
      if (type) sink_ = &type->initializer;
      parse_block();
      sink_ = saved;
      return;
    }
    const std::uint32_t line = cur().line;
    ModifierSet mods = parse_modifiers();
    if (type_declaration_ahead()) {
      TypeDecl* parent = type ? type : current_type_;
      TypeDecl nested = parse_type_declaration(mods, parent->qualified_name);
      parent->nested.push_back(std::move(nested));
      return;
    }
    if (is("<")) parse_type_parameters();

    if (type && cur().is_identifier() && cur().text == type->simple_name) {
      if (at(1).is("(")) {
        std::string_view name = expect_identifier();
        parse_method_rest(type, mods, name, TypeName{}, true, line);
        return;
      }
      if (type->kind == TypeKind::Record && at(1).is("{")) {
        // compact canonical constructor
        std::string_view name = expect_identifier();
        MethodDecl m;
        m.name = std::string(name);
        m.owner = type->qualified_name;
        m.is_constructor = true;
        m.modifiers = mods;
        m.param_count = type->fields.size();
        m.line = line;
        m.body = BodyStats{};
        push_scope();
        for (const FieldDecl& f : type->fields) declare(f.name, f.type_name);
        BodyStats* saved = sink_;
        sink_ = &*m.body;
        parse_block();
        sink_ = saved;
        pop_scope();
        type->methods.push_back(std::move(m));
        return;
      }
    }

    TypeName declared = parse_type();
    std::string_view name = expect_identifier();
    if (is("(")) {
      parse_method_rest(type, mods, name, declared, false, line);
      return;
    }
    // field declarators
    BodyStats* saved = sink_;
    if (type) sink_ = &type->initializer;
    for (;;) {
      int extra = 0;
      while (accept("[")) {
        expect("]");
        ++extra;
      }
      if (type) {
        type->fields.push_back(FieldDecl{std::string(name), type->qualified_name, mods, declared.text(extra), line});
      } else {
        declare(name, declared.text(extra));
      }
      if (accept("=")) parse_variable_initializer();
      if (!accept(",")) break;
      name = expect_identifier();
    }
    sink_ = saved;
    expect(";");
  }

  void parse_method_rest(TypeDecl* type, ModifierSet mods, std::string_view name, const TypeName& ret,
                         bool is_constructor, std::uint32_t line) {
    MethodDecl m;
    m.name = std::string(name);
    m.owner = type ? type->qualified_name : std::string();
    m.is_constructor = is_constructor;
    m.modifiers = mods;
    m.return_type = is_constructor ? std::string() : ret.text();
    m.line = line;
    push_scope();
    m.param_count = parse_formal_parameters();
    while (accept("[")) expect("]");
    if (accept("throws")) {
      do {
        parse_type();
      } while (accept(","));
    }
    if (accept("default")) {
      // annotation element default value
      while (!is(";")) {
        if (cur().is_eof()) fail("unterminated annotation default");
        if (is("(") || is("{") || is("[")) skip_balanced();
        else ++pos_;
      }
    }
    if (accept(";")) {
      // abstract, interface or native: no body
    } else if (is("{")) {
      if (type) {
        m.body = BodyStats{};
        BodyStats* saved = sink_;
        sink_ = &*m.body;
        parse_block();
        sink_ = saved;
      } else {
        parse_block();
      }
    } else {
      fail("expected method body or ';'");
    }
    pop_scope();
    if (type) type->methods.push_back(std::move(m));
  }

  std::size_t parse_formal_parameters() {
    expect("(");
    std::size_t count = 0;
    while (!is(")")) {
      parse_modifiers();
      TypeName tn = parse_type();
      skip_annotations();
      if (accept("...")) ++tn.dims;
      if (is("this")) {
        ++pos_;  // receiver parameter
      } else if (cur().is_identifier() && at(1).is(".") && at(2).is("this")) {
        pos_ += 3;
      } else {
        std::string_view name = expect_identifier();
        int extra = 0;
        while (accept("[")) {
          expect("]");
          ++extra;
        }
        declare(name, tn.text(extra));
        ++count;
      }
      if (!accept(",")) break;
    }
    expect(")");
    return count;
  }

  void parse_anonymous_body() {
    if (current_type_) ++current_type_->anonymous_bodies;
    push_scope();
    expect("{");
    while (!accept("}")) {
      if (cur().is_eof()) fail("unterminated anonymous class body");
      parse_member(nullptr);
    }
    pop_scope();
  }

  // ---- statements --------------------------------------------------------------

  void parse_block() {
    expect("{");
    push_scope();
    while (!accept("}")) {
      if (cur().is_eof()) fail("unterminated block");
      parse_block_statement();
    }
    pop_scope();
  }

  bool local_var_decl_ahead() {
    std::size_t save = pos_;
    TypeName tn;
    bool ok = scan_type(tn) && cur().is_identifier();
    if (ok) {
      const Token& nx = at(1);
      ok = nx.is("=") || nx.is(";") || nx.is(",") || nx.is("[") || nx.is(":");
    }
    pos_ = save;
    return ok;
  }

  void parse_block_statement() {
    if (is("final") || is("abstract") || is("static") || is("strictfp") || is("@") || is("class") ||
        is("interface") || is("enum") || type_declaration_ahead() ||
        (cur().is_identifier() && (cur().text == "sealed" || cur().text == "non") && declaration_keyword_at(1))) {
      ModifierSet mods = parse_modifiers();
      if (type_declaration_ahead()) {
        TypeDecl local = parse_type_declaration(mods, current_type_->qualified_name);
        current_type_->nested.push_back(std::move(local));
        return;
      }
      parse_local_variable_declaration();
      expect(";");
      return;
    }
    if (cur().is_identifier() && cur().text == "yield" && yield_statement_ahead()) {
      parse_statement();
      return;
    }
    if (local_var_decl_ahead()) {
      parse_local_variable_declaration();
      expect(";");
      return;
    }
    parse_statement();
  }

  void parse_local_variable_declaration() {
    TypeName tn = parse_type();
    do {
      std::string_view name = expect_identifier();
      int extra = 0;
      while (accept("[")) {
        expect("]");
        ++extra;
      }
      ++sink().local_var_decls;
      declare(name, tn.name == "var" ? std::string() : tn.text(extra));
      if (accept("=")) parse_variable_initializer();
    } while (accept(","));
  }

  void parse_variable_initializer() {
    if (is("{")) {
      ++pos_;
      while (!accept("}")) {
        parse_variable_initializer();
        if (!accept(",")) {
          expect("}");
          break;
        }
      }
      return;
    }
    parse_expression();
  }

  bool yield_statement_ahead() const {
    const Token& nx = at(1);
    switch (nx.kind) {
      case TokenKind::Identifier:
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::StringLiteral:
      case TokenKind::TextBlock:
        return true;
      case TokenKind::Keyword:
        return nx.text == "new" || nx.text == "this" || nx.text == "super" || nx.text == "switch" ||
               nx.text == "true" || nx.text == "false" || nx.text == "null" || is_primitive(nx.text);
      case TokenKind::Operator:
        return nx.text == "(" || nx.text == "!" || nx.text == "~" || nx.text == "-" || nx.text == "+" ||
               nx.text == "++" || nx.text == "--";
      default:
        return false;
    }
  }

  void parse_paren_expression() {
    expect("(");
    parse_expression();
    expect(")");
  }

  void parse_statement() {
    const Token& tk = cur();
    if (is("{")) {
      parse_block();
      return;
    }
    if (accept(";")) return;
    if (tk.kind == TokenKind::Keyword) {
      std::string_view k = tk.text;
      if (k == "if") {
        ++pos_;
        parse_paren_expression();
        parse_statement();
        if (accept("else")) parse_statement();
        return;
      }
      if (k == "while") {
        ++pos_;
        parse_paren_expression();
        parse_statement();
        return;
      }
      if (k == "do") {
        ++pos_;
        parse_statement();
        expect("while");
        parse_paren_expression();
        expect(";");
        return;
      }
      if (k == "for") {
        parse_for();
        return;
      }
      if (k == "try") {
        parse_try();
        return;
      }
      if (k == "switch") {
        ++pos_;
        parse_paren_expression();
        parse_switch_body();
        return;
      }
      if (k == "return" || k == "throw") {
        ++pos_;
        if (!is(";")) parse_expression();
        expect(";");
        return;
      }
      if (k == "break" || k == "continue") {
        ++pos_;
        if (cur().is_identifier()) ++pos_;
        expect(";");
        return;
      }
      if (k == "synchronized") {
        ++pos_;
        parse_paren_expression();
        parse_block();
        return;
      }
      if (k == "assert") {
        ++pos_;
        parse_expression();
        if (accept(":")) parse_expression();
        expect(";");
        return;
      }
    }
    if (tk.is_identifier()) {
      if (at(1).is(":")) {
        pos_ += 2;  // label
        parse_statement();
        return;
      }
      if (tk.text == "yield" && yield_statement_ahead()) {
        ++pos_;
        parse_expression();
        expect(";");
        return;
      }
    }
    parse_expression();
    expect(";");
  }

  void parse_for() {
    ++pos_;  // for
    expect("(");
    push_scope();
    std::size_t save = pos_;
    parse_modifiers();
    TypeName tn;
    if (scan_type(tn) && cur().is_identifier() && at(1).is(":")) {
      std::string_view name = expect_identifier();
      ++pos_;  // ':'
      ++sink().local_var_decls;
      declare(name, tn.name == "var" ? std::string() : tn.text());
      parse_expression();
      expect(")");
    } else {
      pos_ = save;
      if (!is(";")) {
        if (is("final") || is("@") || local_var_decl_ahead()) {
          parse_modifiers();
          parse_local_variable_declaration();
        } else {
          parse_expression();
          while (accept(",")) parse_expression();
        }
      }
      expect(";");
      if (!is(";")) parse_expression();
      expect(";");
      if (!is(")")) {
        parse_expression();
        while (accept(",")) parse_expression();
      }
      expect(")");
    }
    parse_statement();
    pop_scope();
  }

  void parse_try() {
    ++pos_;  // try
    push_scope();
    if (accept("(")) {
      while (!is(")")) {
        std::size_t save = pos_;
        parse_modifiers();
        TypeName tn;
        if (scan_type(tn) && cur().is_identifier() && at(1).is("=")) {
          std::string_view name = expect_identifier();
          ++pos_;  // '='
          ++sink().local_var_decls;
          declare(name, tn.name == "var" ? std::string() : tn.text());
          parse_expression();
        } else {
          pos_ = save;
          parse_expression();
        }
        if (!accept(";")) break;
      }
      expect(")");
    }
    parse_block();
    while (accept("catch")) {
      expect("(");
      push_scope();
      parse_modifiers();
      TypeName tn = parse_type();
      while (accept("|")) parse_type();
      declare(expect_identifier(), tn.text());
      expect(")");
      parse_block();
      pop_scope();
    }
    if (accept("finally")) parse_block();
    pop_scope();
  }

  void parse_switch_body() {
    expect("{");
    push_scope();
    while (!accept("}")) {
      if (accept("default")) {
        // fall through to the body
      } else if (accept("case")) {
        parse_case_labels();
      } else {
        fail("expected 'case' or 'default'");
      }
      if (accept("->")) {
        if (is("{")) {
          parse_block();
        } else if (is("throw")) {
          parse_statement();
        } else {
          parse_expression();
          expect(";");
        }
      } else {
        expect(":");
        while (!is("case") && !is("default") && !is("}")) {
          if (cur().is_eof()) fail("unterminated switch");
          // `default` as a modifier never starts a statement here
          parse_block_statement();
        }
      }
    }
    pop_scope();
  }

  // A type followed by a binding name or a record-pattern component list.
  bool pattern_ahead() {
    std::size_t save = pos_;
    parse_modifiers();
    TypeName tn;
    bool ok = scan_type(tn) && ((cur().is_identifier() && cur().text != "when") || is("("));
    pos_ = save;
    return ok;
  }

  void parse_pattern() {
    parse_modifiers();
    TypeName tn = parse_type();
    if (is("(")) {
      ++pos_;
      while (!is(")")) {
        parse_pattern();
        if (!accept(",")) break;
      }
      expect(")");
      if (cur().is_identifier() && cur().text != "when") declare(expect_identifier(), tn.text());
      return;
    }
    declare(expect_identifier(), tn.name == "var" ? std::string() : tn.text());
  }

  void parse_case_labels() {
    const bool saved = no_lambda_;
    no_lambda_ = true;
    for (;;) {
      if (accept("default")) {
        // `case null, default`
      } else if (pattern_ahead()) {
        parse_pattern();
      } else {
        parse_ternary();
      }
      if (!accept(",")) break;
    }
    if (cur().is_identifier() && cur().text == "when") {
      ++pos_;
      parse_ternary();
    }
    no_lambda_ = saved;
  }

  // ---- expressions -------------------------------------------------------------

  BodyStats& sink() { return sink_ ? *sink_ : scratch_; }

  void parse_expression() {
    const bool saved = no_lambda_;
    no_lambda_ = false;
    parse_assignment();
    no_lambda_ = saved;
  }

  bool lambda_ahead() const {
    if (no_lambda_) return false;
    if (cur().is_identifier() && at(1).is("->")) return true;
    if (is("(")) {
      std::size_t close = matching_close(pos_);
      return close != 0 && close + 1 < t_.size() && t_[close + 1].is("->");
    }
    return false;
  }

  void parse_lambda() {
    push_scope();
    if (cur().is_identifier()) {
      declare(cur().text, std::string());
      ++pos_;
    } else {
      expect("(");
      while (!is(")")) {
        parse_modifiers();
        if (cur().is_identifier() && (at(1).is(",") || at(1).is(")"))) {
          declare(cur().text, std::string());
          ++pos_;
        } else {
          TypeName tn = parse_type();
          if (accept("...")) ++tn.dims;
          declare(expect_identifier(), tn.name == "var" ? std::string() : tn.text());
        }
        if (!accept(",")) break;
      }
      expect(")");
    }
    expect("->");
    if (is("{")) {
      parse_block();
    } else {
      parse_expression();
    }
    pop_scope();
  }

  void parse_assignment() {
    if (lambda_ahead()) {
      parse_lambda();
      return;
    }
    parse_ternary();
    auto [op, n] = peek_operator();
    if (is_assignment_op(op)) {
      pos_ += n;
      parse_assignment();
    }
  }

  void parse_ternary() {
    parse_binary(1);
    if (accept("?")) {
      const bool saved = no_lambda_;
      no_lambda_ = false;
      parse_assignment();
      expect(":");
      parse_assignment_or_ternary(saved);
      no_lambda_ = saved;
    }
  }

  void parse_assignment_or_ternary(bool restore_no_lambda) {
    // the false branch of a conditional may itself be a lambda, except in
    // case labels where '->' ends the label
    no_lambda_ = restore_no_lambda;
    if (lambda_ahead()) {
      parse_lambda();
    } else {
      parse_ternary();
    }
  }

  void parse_binary(int min_prec) {
    parse_unary();
    for (;;) {
      auto [op, n] = peek_operator();
      int prec = binary_precedence(op);
      if (prec == 0 || prec < min_prec) return;
      pos_ += n;
      if (op == "instanceof") {
        accept("final");
        if (pattern_ahead()) {
          parse_pattern();
        } else {
          parse_type();
        }
        continue;
      }
      parse_binary(prec + 1);
    }
  }

  bool cast_ahead() {
    std::size_t save = pos_;
    ++pos_;  // '('
    TypeName tn;
    bool ok = scan_type(tn);
    bool primitive = ok && tn.primitive && tn.dims == 0;
    while (ok && is("&")) {
      ++pos_;
      TypeName bound;
      ok = scan_type(bound);
      primitive = false;
    }
    ok = ok && is(")");
    bool result = false;
    if (ok) {
      if (primitive) {
        result = true;
      } else {
        const Token& nx = at(1);
        switch (nx.kind) {
          case TokenKind::Identifier:
          case TokenKind::IntLiteral:
          case TokenKind::FloatLiteral:
          case TokenKind::CharLiteral:
          case TokenKind::StringLiteral:
          case TokenKind::TextBlock:
            result = true;
            break;
          case TokenKind::Keyword:
            result = nx.text == "this" || nx.text == "super" || nx.text == "new" || nx.text == "true" ||
                     nx.text == "false" || nx.text == "null" || nx.text == "switch" || is_primitive(nx.text);
            break;
          case TokenKind::Operator:
            result = nx.text == "(" || nx.text == "!" || nx.text == "~";
            break;
          default:
            break;
        }
      }
    }
    pos_ = save;
    return result;
  }

  void parse_unary() {
    if (is("++") || is("--") || is("+") || is("-") || is("!") || is("~")) {
      ++pos_;
      parse_unary();
      return;
    }
    if (is("(")) {
      if (lambda_ahead()) {
        parse_lambda();
        return;
      }
      if (cast_ahead()) {
        ++pos_;
        TypeName tn = parse_type();
        while (accept("&")) parse_type();
        expect(")");
        if (lambda_ahead()) {
          parse_lambda();
          return;
        }
        parse_unary();
        // ((Foo) x).bar: the cast fixes the receiver type
        last_cast_ = {tn.primitive ? std::string() : tn.text(), pos_};
        return;
      }
    }
    if (lambda_ahead()) {
      parse_lambda();
      return;
    }
    Receiver r = parse_primary();
    parse_selectors(std::move(r));
    while (is("++") || is("--")) ++pos_;
  }

  void parse_arguments() {
    expect("(");
    while (!is(")")) {
      parse_expression();
      if (!accept(",")) break;
    }
    expect(")");
  }

  void record_access(std::string_view name, const Receiver& r) {
    AccessSite s;
    s.accessed_name = std::string(name);
    const bool self = r.base == Receiver::Base::This || r.base == Receiver::Base::Super ||
                      r.base == Receiver::Base::OuterThis;
    s.form = self && r.path.empty() ? AccessForm::ThisQualified : AccessForm::Qualified;
    s.receiver = r;
    s.line = t_[pos_ - 1].line;
    s.counted = true;
    sink().field_access_sites.push_back(std::move(s));
  }

  void record_simple_name(std::string_view name, std::uint32_t line) {
    AccessSite s;
    s.accessed_name = std::string(name);
    s.form = AccessForm::SimpleName;
    s.line = line;
    sink().field_access_sites.push_back(std::move(s));
  }

  void record_invocation(std::string_view name, const Receiver& r, std::uint32_t line) {
    InvocationSite s;
    s.invoked_name = std::string(name);
    s.receiver = r;
    s.line = line;
    switch (r.base) {
      case Receiver::Base::None:
        s.receiver_form = ReceiverForm::None;
        break;
      case Receiver::Base::This:
      case Receiver::Base::Super:
      case Receiver::Base::OuterThis:
        s.receiver_form = r.path.empty() ? ReceiverForm::This : ReceiverForm::Expression;
        break;
      default:
        s.receiver_form = ReceiverForm::Expression;  // Name receivers are refined by the linker
        break;
    }
    sink().invocation_sites.push_back(std::move(s));
  }

  void record_constructor_call(std::string name, std::uint32_t line) {
    sink().constructor_calls.push_back(ConstructorCallSite{std::move(name), line, std::nullopt, false});
  }

  static Receiver expression_receiver() { return Receiver{Receiver::Base::Expression, {}, {}, {}}; }

  void parse_selectors(Receiver r) {
    for (;;) {
      if (is(".")) {
        ++pos_;
        if (is("<")) {
          if (!scan_type_arguments()) fail("bad type arguments");
        }
        if (accept("new")) {
          r = parse_creator_after_new();
          continue;
        }
        if (is("this") || is("class")) {
          // only reachable after a non-name primary; keep going defensively
          ++pos_;
          r = expression_receiver();
          continue;
        }
        if (is("super") && at(1).is("(")) {
          ++pos_;
          record_constructor_call("super", cur().line);
          parse_arguments();
          r = expression_receiver();
          continue;
        }
        const std::uint32_t line = cur().line;
        std::string_view name = expect_identifier();
        if (is("(")) {
          record_invocation(name, r, line);
          parse_arguments();
          r = expression_receiver();
          continue;
        }
        record_access(name, r);
        r.path.emplace_back(name);
        continue;
      }
      if (is("[")) {
        ++pos_;
        parse_expression();
        expect("]");
        r = expression_receiver();
        continue;
      }
      if (is("::")) {
        ++pos_;
        if (is("<")) scan_type_arguments();
        if (!accept("new")) expect_identifier();
        r = expression_receiver();
        continue;
      }
      return;
    }
  }

  Receiver parse_creator_after_new() {
    const std::uint32_t line = t_[pos_ - 1].line;
    if (is("<")) {
      if (!scan_type_arguments()) fail("bad type arguments");
    }
    TypeName tn = parse_type(false);
    if (is("[")) {
      while (accept("[")) {
        if (!is("]")) parse_expression();
        expect("]");
        ++tn.dims;
      }
      if (is("{")) parse_variable_initializer();
      return Receiver{Receiver::Base::Typed, tn.text(), {}, {}};
    }
    record_constructor_call(tn.name, line);
    parse_arguments();
    if (is("{")) parse_anonymous_body();
    return Receiver{Receiver::Base::Typed, tn.name, {}, {}};
  }

  Receiver parse_primary() {
    const Token& tk = cur();
    switch (tk.kind) {
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::CharLiteral:
        ++pos_;
        return expression_receiver();
      case TokenKind::StringLiteral:
      case TokenKind::TextBlock:
        ++pos_;
        return Receiver{Receiver::Base::Typed, "String", {}, {}};
      case TokenKind::Identifier:
        return parse_name_primary();
      case TokenKind::Keyword: {
        std::string_view k = tk.text;
        if (k == "this") {
          ++pos_;
          if (is("(")) {
            record_constructor_call("this", tk.line);
            parse_arguments();
            return expression_receiver();
          }
          return Receiver{Receiver::Base::This, {}, {}, {}};
        }
        if (k == "super") {
          ++pos_;
          if (is("(")) {
            record_constructor_call("super", tk.line);
            parse_arguments();
            return expression_receiver();
          }
          return Receiver{Receiver::Base::Super, {}, {}, {}};
        }
        if (k == "new") {
          ++pos_;
          return parse_creator_after_new();
        }
        if (k == "switch") {
          ++pos_;
          parse_paren_expression();
          parse_switch_body();
          return expression_receiver();
        }
        if (k == "true" || k == "false" || k == "null") {
          ++pos_;
          return expression_receiver();
        }
        if (is_primitive(k)) {
          // int.class, int[].class, int[]::new
          parse_type();
          if (accept(".")) expect("class");
          return expression_receiver();
        }
        break;
      }
      case TokenKind::Operator:
        if (tk.text == "(") {
          ++pos_;
          const bool inner_cast = is("(") && cast_ahead();
          parse_expression();
          const bool whole_is_cast = inner_cast && last_cast_.second == pos_ && !last_cast_.first.empty();
          expect(")");
          if (whole_is_cast) return Receiver{Receiver::Base::Typed, last_cast_.first, {}, {}};
          return expression_receiver();
        }
        break;
      default:
        break;
    }
    fail("expected an expression");
  }

  Receiver parse_name_primary() {
    const Token& head = cur();
    ++pos_;
    if (is("(")) {
      record_invocation(head.text, Receiver{}, head.line);
      parse_arguments();
      return expression_receiver();
    }
    std::vector<std::string> segs{std::string(head.text)};
    std::vector<std::uint32_t> lines{head.line};
    while (is(".") && at(1).is_identifier() && !at(2).is("(")) {
      segs.emplace_back(at(1).text);
      lines.push_back(at(1).line);
      pos_ += 2;
    }
    if (is(".") && at(1).is("class")) {
      pos_ += 2;
      return expression_receiver();
    }
    if (is(".") && at(1).is("this")) {
      pos_ += 2;
      return Receiver{Receiver::Base::OuterThis, join(segs), {}, {}};
    }
    if (is(".") && at(1).is("super") && !at(2).is("(")) {
      pos_ += 2;
      return Receiver{Receiver::Base::Super, join(segs), {}, {}};
    }
    if (is("[") && at(1).is("]")) {
      while (is("[") && at(1).is("]")) pos_ += 2;
      if (accept(".")) expect("class");
      return expression_receiver();
    }
    if (is("<")) {
      // List<String>::new
      std::size_t save = pos_;
      if (scan_type_arguments() && is("::")) return expression_receiver();
      pos_ = save;
    }

    if (const std::string* local = lookup_local(segs[0])) {
      Receiver r{Receiver::Base::Typed, *local, {}, {}};
      for (std::size_t i = 1; i < segs.size(); ++i) {
        record_access_at(segs[i], r, lines[i]);
        r.path.push_back(segs[i]);
      }
      return r;
    }
    record_simple_name(segs[0], lines[0]);
    Receiver r{Receiver::Base::Name, {}, {segs[0]}, segs};
    for (std::size_t i = 1; i < segs.size(); ++i) {
      record_access_at(segs[i], r, lines[i]);
      r.path.push_back(segs[i]);
    }
    return r;
  }

  void record_access_at(const std::string& name, const Receiver& r, std::uint32_t line) {
    record_access(name, r);
    sink().field_access_sites.back().line = line;
  }

  const std::vector<Token>& t_;
  CompilationUnit& unit_;
  std::size_t pos_ = 0;
  std::vector<Scope> scopes_;
  TypeDecl* current_type_ = nullptr;
  BodyStats* sink_ = nullptr;
  BodyStats scratch_;
  std::pair<std::string, std::size_t> last_cast_;  // type and end position of the latest cast
  bool no_lambda_ = false;
};

}  // namespace

CompilationUnit parse_unit(const SourceFile& file) {
  CompilationUnit unit;
  unit.path = file.path;
  unit.loc = count_loc(file.text);
  try {
    std::vector<Token> tokens = tokenize(file.text);
    Parser(tokens, unit).parse_compilation_unit();
  } catch (const ParseError& e) {
    unit.types.clear();
    unit.imports.clear();
    unit.package_name = std::string(kDefaultPackage);
    unit.parse_error = Diagnostic{Diagnostic::Kind::ParseError, file.path, e.line(), e.column(), e.what()};
  }
  return unit;
}

}  // namespace iris
