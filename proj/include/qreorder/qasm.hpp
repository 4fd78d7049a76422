// Copyright 2026 The qreorder Authors
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


#pragma once

// OpenQASM 2.0 subset: qreg/creg, h x sx rz cx, barrier, measure.
// Angle arguments accept arithmetic over numeric literals and `pi`.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qreorder/circuit.hpp"
#include "qreorder/error.hpp"

namespace qreorder {

namespace qasm_detail {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        t.text += advance();
      t.type = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
        t.text += advance();
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        t.text += advance();
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) t.text += advance();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
      }
      t.type = Tok::Number;
    } else if (c == '"') {
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += advance();
      if (pos_ >= src_.size() || src_[pos_] != '"') throw ParseError("unterminated string", t.line, t.column);
      advance();
      t.type = Tok::String;
    } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      t.text = "->";
      advance();
      advance();
      t.type = Tok::Symbol;
    } else if (std::string_view("()[],;+-*/{}").find(c) != std::string_view::npos) {
      t.text = std::string(1, advance());
      t.type = Tok::Symbol;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
    }
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

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
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

struct Register {
  std::string name;
  int size = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

  Circuit parse() {
    if (is_ident("OPENQASM")) {
      take();
      const Token v = expect(Tok::Number, "version number");
      if (v.text != "2.0" && v.text != "2") throw ParseError("only OpenQASM 2.0 is supported", v.line, v.column);
      expect_symbol(";");
    }
    while (cur_.type != Tok::End) statement();
    return Circuit(qreg_ ? qreg_->size : 0, creg_ ? creg_->size : 0, std::move(gates_));
  }

 private:
  void statement() {
    const Token head = expect(Tok::Ident, "statement");
    const std::string &kw = head.text;
    if (kw == "include") {
      expect(Tok::String, "include path");
      expect_symbol(";");
    } else if (kw == "qreg" || kw == "creg") {
      declare(kw == "qreg" ? qreg_ : creg_, head);
    } else if (kw == "barrier") {
      std::vector<int> qs;
      do {
        for (int q : qubit_arg()) qs.push_back(q);
      } while (accept_symbol(","));
      expect_symbol(";");
      gates_.push_back(Gate::barrier(std::move(qs)));
    } else if (kw == "measure") {
      const auto qs = qubit_arg();
      expect_symbol("->");
      const auto cs = clbit_arg();
      expect_symbol(";");
      if (qs.size() != cs.size()) throw ParseError("measure register widths differ", head.line, head.column);
      for (std::size_t i = 0; i < qs.size(); ++i) gates_.push_back(Gate::measure(qs[i], cs[i]));
    } else if (kw == "h" || kw == "x" || kw == "sx" || kw == "rz" || kw == "cx") {
      gate(head);
    } else {
      throw UnsupportedGateError(kw, head.line, head.column);
    }
  }

  void declare(std::optional<Register> &slot, const Token &head) {
    if (slot) throw ParseError("only one " + head.text + " declaration is supported", head.line, head.column);
    const Token name = expect(Tok::Ident, "register name");
    expect_symbol("[");
    const Token size = expect(Tok::Number, "register size");
    expect_symbol("]");
    expect_symbol(";");
    slot = Register{name.text, to_int(size)};
    if (slot->size <= 0) throw ParseError("register size must be positive", size.line, size.column);
  }

  void gate(const Token &head) {
    std::vector<double> params;
    if (accept_symbol("(")) {
      if (!accept_symbol(")")) {
        do {
          params.push_back(expression());
        } while (accept_symbol(","));
        expect_symbol(")");
      }
    }
    std::vector<std::vector<int>> args;
    do {
      args.push_back(qubit_arg());
    } while (accept_symbol(","));
    expect_symbol(";");

    const bool is_rz = head.text == "rz";
    if (params.size() != (is_rz ? 1U : 0U))
      throw ParseError("wrong parameter count for '" + head.text + "'", head.line, head.column);
    const std::size_t arity = head.text == "cx" ? 2 : 1;
    if (args.size() != arity) throw ParseError("wrong argument count for '" + head.text + "'", head.line, head.column);

    if (arity == 2) {
      if (args[0].size() != 1 || args[1].size() != 1)
        throw ParseError("register broadcast is not supported for cx", head.line, head.column);
      gates_.push_back(Gate::cx(args[0][0], args[1][0]));
      return;
    }
    for (int q : args[0]) {
      if (head.text == "h") gates_.push_back(Gate::h(q));
      else if (head.text == "x") gates_.push_back(Gate::x(q));
      else if (head.text == "sx") gates_.push_back(Gate::sx(q));
      else gates_.push_back(Gate::rz(q, params[0]));
    }
  }

  std::vector<int> qubit_arg() { return register_arg(qreg_, "quantum"); }
  std::vector<int> clbit_arg() { return register_arg(creg_, "classical"); }

  std::vector<int> register_arg(const std::optional<Register> &reg, const char *what) {
    const Token name = expect(Tok::Ident, std::string(what) + " register");
    if (!reg || reg->name != name.text)
      throw ParseError(std::string("undeclared ") + what + " register '" + name.text + "'", name.line, name.column);
    if (!accept_symbol("[")) {
      std::vector<int> all(static_cast<std::size_t>(reg->size));
      for (int i = 0; i < reg->size; ++i) all[static_cast<std::size_t>(i)] = i;
      return all;
    }
    const Token idx = expect(Tok::Number, "index");
    expect_symbol("]");
    const int i = to_int(idx);
    if (i >= reg->size)
      throw RegisterRangeError("index " + idx.text + " out of range for " + reg->name + "[" +
                                   std::to_string(reg->size) + "]",
                               idx.line, idx.column);
    return {i};
  }

  double expression() {
    double v = term();
    while (true) {
      if (accept_symbol("+")) v += term();
      else if (accept_symbol("-")) v -= term();
      else return v;
    }
  }

  double term() {
    double v = unary();
    while (true) {
      if (accept_symbol("*")) v *= unary();
      else if (accept_symbol("/")) v /= unary();
      else return v;
    }
  }

  double unary() {
    if (accept_symbol("-")) return -unary();
    if (accept_symbol("+")) return unary();
    if (accept_symbol("(")) {
      const double v = expression();
      expect_symbol(")");
      return v;
    }
    if (is_ident("pi")) {
      take();
      return std::numbers::pi;
    }
    const Token num = expect(Tok::Number, "angle");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), v);
    if (ec != std::errc() || ptr != num.text.data() + num.text.size() || !std::isfinite(v))
      throw ParseError("malformed number '" + num.text + "'", num.line, num.column);
    return v;
  }

  int to_int(const Token &t) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.column);
    return v;
  }

  bool is_ident(std::string_view s) const { return cur_.type == Tok::Ident && cur_.text == s; }

  Token take() {
    Token t = cur_;
    cur_ = lex_.next();
    return t;
  }

  Token expect(Tok type, const std::string &what) {
    if (cur_.type != type) {
      const std::string got = cur_.type == Tok::End ? "end of input" : "'" + cur_.text + "'";
      throw ParseError("expected " + what + ", got " + got, cur_.line, cur_.column);
    }
    return take();
  }

  bool accept_symbol(std::string_view s) {
    if (cur_.type == Tok::Symbol && cur_.text == s) {
      take();
      return true;
    }
    return false;
  }

  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) {
      const std::string got = cur_.type == Tok::End ? "end of input" : "'" + cur_.text + "'";
      throw ParseError("expected '" + std::string(s) + "', got " + got, cur_.line, cur_.column);
    }
  }

  Lexer lex_;
  Token cur_;
  std::optional<Register> qreg_;
  std::optional<Register> creg_;
  std::vector<Gate> gates_;
};

inline std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace qasm_detail

/// Parse the supported subset. Throws ParseError (and subclasses) with the
/// offending line and column.
inline Circuit parse_qasm(std::string_view text) { return qasm_detail::Parser(text).parse(); }

/// One statement per line; registers are always named q and c. Angles use 17
/// significant digits so parse_qasm(emit_qasm(c)) reproduces them exactly.
inline std::string emit_qasm(const Circuit &c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.num_qubits()) + "];\n";
  if (c.num_clbits() > 0) out += "creg c[" + std::to_string(c.num_clbits()) + "];\n";
  auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };
  for (const auto &g : c.gates()) {
    switch (g.kind) {
      case GateKind::Measure:
        out += "measure " + q(g.qubits[0]) + " -> c[" + std::to_string(*g.clbit) + "];\n";
        continue;
      case GateKind::RZ:
        out += "rz(" + qasm_detail::format_angle(g.angle) + ") ";
        break;
      default:
        out += std::string(gate_name(g.kind)) + " ";
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i) out += ",";
      out += q(g.qubits[i]);
    }
    out += ";\n";
  }
  return out;
}

}  // namespace qreorder
