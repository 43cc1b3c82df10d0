// Copyright 2026 The Mirrorbreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mirrorbreak/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mirrorbreak/errors.hpp"

namespace mirrorbreak {

namespace {

enum class Tok { Ident, Number, String, Symbol, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        t.text.push_back(advance());
      }
      t.kind = Tok::Ident;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < src_.size() &&
                                                        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      const char* begin = src_.data() + pos_;
      const char* end = src_.data() + src_.size();
      auto res = std::from_chars(begin, end, t.number);
      if (res.ec != std::errc()) throw ParseError("malformed number", t.line, t.column);
      const auto len = static_cast<std::size_t>(res.ptr - begin);
      t.text.assign(begin, len);
      for (std::size_t k = 0; k < len; ++k) advance();
      t.kind = Tok::Number;
      return t;
    }
    if (c == '"') {
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"') t.text.push_back(advance());
      if (pos_ >= src_.size()) throw ParseError("unterminated string", t.line, t.column);
      advance();
      t.kind = Tok::String;
      return t;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      advance();
      advance();
      t.kind = Tok::Arrow;
      t.text = "->";
      return t;
    }
    t.kind = Tok::Symbol;
    t.text.push_back(advance());
    return t;
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

const std::unordered_map<std::string, GateKind>& gate_table() {
  static const std::unordered_map<std::string, GateKind> table = {
      {"h", GateKind::H},     {"x", GateKind::X},     {"rx", GateKind::RX},
      {"ry", GateKind::RY},   {"rz", GateKind::RZ},   {"u3", GateKind::U3},
      {"u", GateKind::U3},    {"cx", GateKind::CX},   {"CX", GateKind::CX},
      {"rzz", GateKind::RZZ}, {"swap", GateKind::SWAP}};
  return table;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  Circuit parse() {
    expect_ident("OPENQASM");
    if (tok_.kind != Tok::Number || tok_.text.rfind("2", 0) != 0) {
      fail("only OpenQASM 2.x is supported");
    }
    bump();
    expect_symbol(";");

    std::optional<Circuit> circuit;
    while (tok_.kind != Tok::End) {
      if (tok_.kind != Tok::Ident) fail("expected a statement, found '" + tok_.text + "'");
      const Token head = tok_;
      if (head.text == "include") {
        bump();
        if (tok_.kind != Tok::String) fail("expected include file name");
        bump();
        expect_symbol(";");
      } else if (head.text == "qreg") {
        bump();
        if (circuit) fail_at(head, "only one quantum register is supported");
        if (tok_.kind != Tok::Ident) fail("expected register name");
        reg_ = tok_.text;
        bump();
        expect_symbol("[");
        const int n = parse_index();
        expect_symbol("]");
        expect_symbol(";");
        if (n < 1) fail_at(head, "register must have at least one qubit");
        circuit.emplace(n);
      } else if (head.text == "creg") {
        bump();
        skip_to_semicolon();
      } else if (head.text == "barrier" || head.text == "measure" || head.text == "reset") {
        if (head.text == "reset") fail_at(head, "unsupported construct 'reset'");
        bump();
        skip_to_semicolon();
      } else if (head.text == "gate" || head.text == "opaque" || head.text == "if") {
        fail_at(head, "unsupported construct '" + head.text + "'");
      } else {
        if (!circuit) fail_at(head, "gate before qreg declaration");
        parse_gate(*circuit);
      }
    }
    if (!circuit) throw ParseError("no qreg declared", tok_.line, tok_.column);
    return std::move(*circuit);
  }

 private:
  void bump() { tok_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tok_.line, tok_.column); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.column);
  }

  void expect_ident(const std::string& word) {
    if (tok_.kind != Tok::Ident || tok_.text != word) fail("expected '" + word + "'");
    bump();
  }

  void expect_symbol(const std::string& sym) {
    if (tok_.kind != Tok::Symbol || tok_.text != sym) {
      fail("expected '" + sym + "', found '" + (tok_.kind == Tok::End ? "end of input" : tok_.text) + "'");
    }
    bump();
  }

  bool at_symbol(const char* sym) const { return tok_.kind == Tok::Symbol && tok_.text == sym; }

  void skip_to_semicolon() {
    while (tok_.kind != Tok::End && !at_symbol(";")) bump();
    expect_symbol(";");
  }

  int parse_index() {
    if (tok_.kind != Tok::Number) fail("expected integer index");
    const double v = tok_.number;
    if (v != std::floor(v) || v < 0 || v > 1e6) fail("invalid index '" + tok_.text + "'");
    bump();
    return static_cast<int>(v);
  }

  // expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
  // unary := '-' unary | primary ; primary := number | pi | '(' expr ')'
  double parse_expr() {
    double v = parse_term();
    while (at_symbol("+") || at_symbol("-")) {
      const bool plus = tok_.text == "+";
      bump();
      const double rhs = parse_term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }
  double parse_term() {
    double v = parse_unary();
    while (at_symbol("*") || at_symbol("/")) {
      const bool mul = tok_.text == "*";
      bump();
      const double rhs = parse_unary();
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }
  double parse_unary() {
    if (at_symbol("-")) {
      bump();
      return -parse_unary();
    }
    if (at_symbol("+")) {
      bump();
      return parse_unary();
    }
    return parse_primary();
  }
  double parse_primary() {
    if (tok_.kind == Tok::Number) {
      const double v = tok_.number;
      bump();
      return v;
    }
    if (tok_.kind == Tok::Ident && tok_.text == "pi") {
      bump();
      return std::numbers::pi;
    }
    if (at_symbol("(")) {
      bump();
      const double v = parse_expr();
      expect_symbol(")");
      return v;
    }
    fail("expected angle expression");
  }

  int parse_qubit(const Circuit& c) {
    const Token at = tok_;
    if (tok_.kind != Tok::Ident || tok_.text != reg_) fail("expected qubit of register '" + reg_ + "'");
    bump();
    if (!at_symbol("[")) fail_at(at, "whole-register gate arguments are not supported");
    bump();
    const Token idx_tok = tok_;
    const int q = parse_index();
    expect_symbol("]");
    if (q >= c.num_qubits()) {
      fail_at(idx_tok, "qubit index " + std::to_string(q) + " out of register bounds (size " +
                           std::to_string(c.num_qubits()) + ")");
    }
    return q;
  }

  void parse_gate(Circuit& c) {
    const Token head = tok_;
    const auto it = gate_table().find(head.text);
    if (it == gate_table().end()) fail_at(head, "unsupported gate '" + head.text + "'");
    const GateKind kind = it->second;
    bump();

    std::vector<double> params;
    if (at_symbol("(")) {
      bump();
      if (!at_symbol(")")) {
        params.push_back(parse_expr());
        while (at_symbol(",")) {
          bump();
          params.push_back(parse_expr());
        }
      }
      expect_symbol(")");
    }
    if (params.size() != gate_param_count(kind)) {
      fail_at(head, "gate '" + head.text + "' expects " + std::to_string(gate_param_count(kind)) +
                        " parameter(s), got " + std::to_string(params.size()));
    }

    std::vector<int> qubits{parse_qubit(c)};
    while (at_symbol(",")) {
      bump();
      qubits.push_back(parse_qubit(c));
    }
    if (qubits.size() != gate_arity(kind)) {
      fail_at(head, "arity error: gate '" + head.text + "' acts on " +
                        std::to_string(gate_arity(kind)) + " qubit(s), got " +
                        std::to_string(qubits.size()));
    }
    expect_symbol(";");
    try {
      c.add(qubits.size() == 1 ? Gate::one(kind, qubits[0], params)
                               : Gate::two(kind, qubits[0], qubits[1], params));
    } catch (const std::exception& e) {
      fail_at(head, e.what());
    }
  }

  Lexer lex_;
  Token tok_;
  std::string reg_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser(text).parse(); }

std::string to_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(c.num_qubits()) + "];\n";
  char buf[64];
  for (const Gate& g : c.gates()) {
    out += gate_name(g.kind);
    if (g.num_params() > 0) {
      out += '(';
      for (std::size_t k = 0; k < g.num_params(); ++k) {
        if (k) out += ',';
        std::snprintf(buf, sizeof buf, "%.17g", g.params[k]);
        out += buf;
      }
      out += ')';
    }
    out += " q[" + std::to_string(g.qubits[0]) + "]";
    if (g.is_two_qubit()) out += ",q[" + std::to_string(g.qubits[1]) + "]";
    out += ";\n";
  }
  return out;
}

}  // namespace mirrorbreak
