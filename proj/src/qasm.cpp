// Copyright 2026 The approxdd Authors
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

#include "approxdd/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include "approxdd/errors.hpp"

namespace approxdd {
namespace {

enum class Tok { kIdent, kNumber, kString, kSymbol, kArrow, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) {
      return tok;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = Tok::kIdent;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok.text += advance();
      }
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      tok.kind = Tok::kNumber;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        tok.text += advance();
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        tok.text += advance();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
          tok.text += advance();
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          tok.text += advance();
        }
      }
      return tok;
    }
    if (c == '"') {
      tok.kind = Tok::kString;
      advance();
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
        tok.text += advance();
      }
      if (pos_ >= text_.size() || text_[pos_] != '"') {
        throw ParseError("unterminated string", tok.line, tok.column);
      }
      advance();
      return tok;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok.kind = Tok::kArrow;
      tok.text = "->";
      advance();
      advance();
      return tok;
    }
    static constexpr std::string_view kSymbols = ";,[](){}+-*/^";
    if (kSymbols.find(c) != std::string_view::npos) {
      tok.kind = Tok::kSymbol;
      tok.text = std::string(1, advance());
      return tok;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tok.line, tok.column);
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          advance();
        }
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct GateForm {
  std::string_view name;
  GateKind kind;
  std::size_t params;
  std::size_t qubits;
};

constexpr GateForm kForms[] = {
    {"h", GateKind::kH, 0, 1},          {"x", GateKind::kX, 0, 1},
    {"y", GateKind::kY, 0, 1},          {"z", GateKind::kZ, 0, 1},
    {"s", GateKind::kS, 0, 1},          {"sdg", GateKind::kSdg, 0, 1},
    {"t", GateKind::kT, 0, 1},          {"tdg", GateKind::kTdg, 0, 1},
    {"rx", GateKind::kRX, 1, 1},        {"ry", GateKind::kRY, 1, 1},
    {"rz", GateKind::kRZ, 1, 1},        {"u1", GateKind::kPhase, 1, 1},
    {"p", GateKind::kPhase, 1, 1},      {"sx", GateKind::kSqrtX, 0, 1},
    {"sy", GateKind::kSqrtY, 0, 1},     {"cx", GateKind::kCX, 0, 2},
    {"CX", GateKind::kCX, 0, 2},        {"cz", GateKind::kCZ, 0, 2},
    {"cp", GateKind::kCPhase, 1, 2},    {"cu1", GateKind::kCPhase, 1, 2},
    {"ccx", GateKind::kCCX, 0, 3},      {"swap", GateKind::kSwap, 0, 2},
};

const GateForm* find_form(std::string_view name) {
  for (const GateForm& form : kForms) {
    if (form.name == name) {
      return &form;
    }
  }
  return nullptr;
}

// One qubit argument; `index` is empty when a whole register was named.
struct Operand {
  std::optional<std::size_t> index;
  Token at;
};

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string>* warnings)
      : lexer_(text), warnings_(warnings) {
    current_ = lexer_.next();
  }

  Circuit parse() {
    if (is_ident("OPENQASM")) {
      take();
      expect_kind(Tok::kNumber, "version number");
      expect_symbol(";");
    }
    while (current_.kind != Tok::kEnd) {
      statement();
    }
    if (!circuit_) {
      throw ParseError("no qreg declared", current_.line, current_.column);
    }
    return std::move(*circuit_);
  }

 private:
  void statement() {
    const Token head = current_;
    if (head.kind != Tok::kIdent) {
      fail("expected a statement", head);
    }
    if (head.text == "include") {
      take();
      expect_kind(Tok::kString, "file name");
      expect_symbol(";");
    } else if (head.text == "qreg") {
      take();
      qreg(head);
    } else if (head.text == "creg") {
      take();
      expect_kind(Tok::kIdent, "register name");
      expect_symbol("[");
      expect_kind(Tok::kNumber, "register size");
      expect_symbol("]");
      expect_symbol(";");
      warn(head, "classical register ignored");
    } else if (head.text == "measure") {
      take();
      while (!is_symbol(";")) {
        if (current_.kind == Tok::kEnd) {
          fail("expected ';'", current_);
        }
        take();
      }
      take();
      warn(head, "measurement ignored");
    } else if (head.text == "barrier") {
      take();
      require_circuit(head);
      (void)operands();
      expect_symbol(";");
      circuit_->barrier();
    } else if (head.text == "gate" || head.text == "opaque") {
      fail("custom gate definitions are not supported", head);
    } else {
      take();
      gate(head);
    }
  }

  void qreg(const Token& head) {
    if (circuit_) {
      fail("only one qreg is supported", head);
    }
    const Token name = expect_kind(Tok::kIdent, "register name");
    expect_symbol("[");
    const Token size_tok = expect_kind(Tok::kNumber, "register size");
    expect_symbol("]");
    expect_symbol(";");
    const std::size_t size = integer(size_tok);
    if (size == 0) {
      fail("register size must be positive", size_tok);
    }
    register_name_ = name.text;
    circuit_.emplace(size);
  }

  void gate(const Token& head) {
    const GateForm* form = find_form(head.text);
    if (form == nullptr) {
      fail("unknown gate '" + head.text + "'", head);
    }
    require_circuit(head);
    std::vector<double> params;
    if (is_symbol("(")) {
      take();
      if (!is_symbol(")")) {
        params.push_back(expression());
        while (is_symbol(",")) {
          take();
          params.push_back(expression());
        }
      }
      expect_symbol(")");
    }
    if (params.size() != form->params) {
      fail("gate '" + head.text + "' takes " + std::to_string(form->params) +
               " parameter(s), got " + std::to_string(params.size()),
           head);
    }
    const std::vector<Operand> args = operands();
    expect_symbol(";");
    if (args.size() != form->qubits) {
      fail("gate '" + head.text + "' takes " + std::to_string(form->qubits) +
               " qubit(s), got " + std::to_string(args.size()),
           head);
    }
    const double angle = params.empty() ? 0.0 : params.front();
    if (form->qubits == 1) {
      if (args[0].index) {
        circuit_->add(GateSpec::single(form->kind, *args[0].index, angle));
      } else {
        for (Qubit q = 0; q < circuit_->num_qubits(); ++q) {
          circuit_->add(GateSpec::single(form->kind, q, angle));
        }
      }
      return;
    }
    std::vector<Qubit> qubits;
    for (const Operand& op : args) {
      if (!op.index) {
        fail("register broadcast is only supported for single-qubit gates", op.at);
      }
      for (Qubit seen : qubits) {
        if (seen == *op.index) {
          fail("qubit q[" + std::to_string(seen) + "] used twice", op.at);
        }
      }
      qubits.push_back(*op.index);
    }
    switch (form->kind) {
      case GateKind::kCCX:
        circuit_->add(GateSpec::ccx(qubits[0], qubits[1], qubits[2]));
        break;
      case GateKind::kSwap:
        circuit_->add(GateSpec::swap(qubits[0], qubits[1]));
        break;
      default:
        circuit_->add(GateSpec::controlled(form->kind, qubits[0], qubits[1], angle));
        break;
    }
  }

  std::vector<Operand> operands() {
    std::vector<Operand> result;
    result.push_back(operand());
    while (is_symbol(",")) {
      take();
      result.push_back(operand());
    }
    return result;
  }

  Operand operand() {
    const Token name = expect_kind(Tok::kIdent, "qubit operand");
    if (name.text != register_name_) {
      fail("unknown register '" + name.text + "'", name);
    }
    Operand op{std::nullopt, name};
    if (is_symbol("[")) {
      take();
      const Token index_tok = expect_kind(Tok::kNumber, "qubit index");
      expect_symbol("]");
      const std::size_t index = integer(index_tok);
      if (index >= circuit_->num_qubits()) {
        fail("qubit index " + std::to_string(index) + " out of range for register of size " +
                 std::to_string(circuit_->num_qubits()),
             index_tok);
      }
      op.index = index;
    }
    return op;
  }

  double expression() {
    double value = term();
    while (is_symbol("+") || is_symbol("-")) {
      const bool plus = take().text == "+";
      const double rhs = term();
      value = plus ? value + rhs : value - rhs;
    }
    return value;
  }

  double term() {
    double value = unary();
    while (is_symbol("*") || is_symbol("/")) {
      const Token op = take();
      const double rhs = unary();
      if (op.text == "*") {
        value *= rhs;
      } else {
        if (rhs == 0.0) {
          fail("division by zero", op);
        }
        value /= rhs;
      }
    }
    return value;
  }

  double unary() {
    if (is_symbol("-")) {
      take();
      return -unary();
    }
    if (is_symbol("+")) {
      take();
      return unary();
    }
    const double base = primary();
    if (is_symbol("^")) {
      take();
      return std::pow(base, unary());
    }
    return base;
  }

  double primary() {
    const Token tok = current_;
    if (tok.kind == Tok::kNumber) {
      take();
      double value = 0.0;
      const char* end = tok.text.data() + tok.text.size();
      auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
      if (ec != std::errc{} || ptr != end) {
        fail("malformed number '" + tok.text + "'", tok);
      }
      return value;
    }
    if (tok.kind == Tok::kIdent && tok.text == "pi") {
      take();
      return std::numbers::pi;
    }
    if (is_symbol("(")) {
      take();
      const double value = expression();
      expect_symbol(")");
      return value;
    }
    fail("malformed parameter expression", tok);
  }

  std::size_t integer(const Token& tok) {
    std::size_t value = 0;
    const char* end = tok.text.data() + tok.text.size();
    auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      fail("expected an integer, got '" + tok.text + "'", tok);
    }
    return value;
  }

  void require_circuit(const Token& at) {
    if (!circuit_) {
      fail("statement before qreg declaration", at);
    }
  }

  void warn(const Token& at, const std::string& message) {
    if (warnings_ != nullptr) {
      warnings_->push_back(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " +
                           message);
    }
  }

  [[noreturn]] static void fail(const std::string& message, const Token& at) {
    throw ParseError(message, at.line, at.column);
  }

  bool is_symbol(std::string_view s) const {
    return current_.kind == Tok::kSymbol && current_.text == s;
  }
  bool is_ident(std::string_view s) const {
    return current_.kind == Tok::kIdent && current_.text == s;
  }

  Token take() {
    Token tok = std::move(current_);
    current_ = lexer_.next();
    return tok;
  }

  Token expect_kind(Tok kind, const std::string& what) {
    if (current_.kind != kind) {
      fail("expected " + what, current_);
    }
    return take();
  }

  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) {
      fail("expected '" + std::string(s) + "'", current_);
    }
    take();
  }

  Lexer lexer_;
  std::vector<std::string>* warnings_;
  Token current_;
  std::string register_name_;
  std::optional<Circuit> circuit_;
};

std::string format_angle(double angle) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", angle);
  return buf;
}

}  // namespace

Circuit parse_qasm(std::string_view text, std::vector<std::string>* warnings) {
  return Parser(text, warnings).parse();
}

std::string to_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits() << "];\n";
  const std::string& init = circuit.initial_state();
  for (std::size_t q = 0; q < circuit.num_qubits(); ++q) {
    if (init[init.size() - 1 - q] == '1') {
      out << "x q[" << q << "];\n";
    }
  }
  const auto& markers = circuit.markers();
  auto marker = markers.begin();
  const auto emit_barriers = [&](std::size_t position) {
    while (marker != markers.end() && *marker == position) {
      out << "barrier q;\n";
      ++marker;
    }
  };
  for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
    emit_barriers(i);
    const GateSpec& g = circuit.ops()[i];
    if (g.kind == GateKind::kPermutation) {
      throw InputError("permutation gates cannot be written as OpenQASM 2.0");
    }
    out << gate_name(g.kind);
    if (has_angle(g.kind)) {
      out << '(' << format_angle(g.angle) << ')';
    }
    const char* sep = " ";
    for (Qubit c : g.controls) {
      out << sep << "q[" << c << ']';
      sep = ",";
    }
    for (Qubit t : g.targets) {
      out << sep << "q[" << t << ']';
      sep = ",";
    }
    out << ";\n";
  }
  emit_barriers(circuit.ops().size());
  return out.str();
}

}  // namespace approxdd
