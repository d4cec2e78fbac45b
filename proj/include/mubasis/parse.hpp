// Copyright 2026 the mubasis authors
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

#ifndef MUBASIS_PARSE_HPP
#define MUBASIS_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "mubasis/mpoly.hpp"

namespace mubasis {

// Syntax failure with the byte offset and the token set that would have
// been accepted there.
class parse_error : public input_error {
 public:
  parse_error(std::size_t offset, std::vector<std::string> expected,
              const std::string& found)
      : input_error(build_message(offset, expected, found)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string build_message(std::size_t offset,
                                   const std::vector<std::string>& expected,
                                   const std::string& found) {
    std::string msg = "syntax error at offset " + std::to_string(offset) +
                      ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found;
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

namespace detail {

// Recursive descent over +, -, *, ^ and rational literals "a/b", with
// standard precedence (^ binds tighter than unary minus, then *, then
// the additive level). Implicit multiplication is not supported.
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  MPoly parse() {
    skip_ws();
    MPoly p = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      fail({"end of input", "'+'", "'-'", "'*'", "'^'"});
    return p;
  }

 private:
  static constexpr int kMaxExponent = 512;

  MPoly parse_expr() {
    MPoly acc = parse_term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        acc = acc + parse_term();
      } else if (accept('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  MPoly parse_term() {
    MPoly acc = parse_factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc = acc * parse_factor();
      } else if (peek() == '/') {
        fail({"'*'", "'+'", "'-'", "end of input"},
             "'/' (division is only allowed inside rational literals)");
      } else {
        return acc;
      }
    }
  }

  MPoly parse_factor() {
    skip_ws();
    if (accept('-')) return -parse_factor();
    return parse_power();
  }

  MPoly parse_power() {
    MPoly base = parse_primary();
    for (;;) {
      skip_ws();
      if (!accept('^')) return base;
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail({"nonnegative integer exponent"}, describe(at));
      Int e = read_integer();
      if (e > kMaxExponent)
        throw input_error("exponent too large at offset " +
                          std::to_string(at));
      base = base.pow(static_cast<int>(e.get_si()));
    }
  }

  MPoly parse_primary() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      Int num = read_integer();
      skip_ws();
      if (accept('/')) {
        skip_ws();
        std::size_t dat = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          fail({"integer denominator"}, describe(dat));
        Int den = read_integer();
        if (den == 0)
          throw input_error("zero denominator in rational literal at offset " +
                            std::to_string(at));
        Rat r(num, den);
        r.canonicalize();
        return MPoly::constant(r);
      }
      return MPoly::constant(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(peek()))) name += text_[pos_++];
      for (std::size_t v = 0; v < vars_.size(); ++v)
        if (vars_[v] == name) return MPoly::variable(static_cast<int>(v));
      std::vector<std::string> expected;
      for (const auto& v : vars_) expected.push_back("variable '" + v + "'");
      fail_at(at, expected, "'" + name + "'");
    }
    if (accept('(')) {
      MPoly p = parse_expr();
      skip_ws();
      if (!accept(')')) fail({"')'"});
      return p;
    }
    std::vector<std::string> expected = {"integer", "'('", "'-'"};
    for (const auto& v : vars_) expected.push_back("variable '" + v + "'");
    fail(expected);
  }

  Int read_integer() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    return Int(digits);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(
                                      text_[pos_])))
      ++pos_;
  }

  std::string describe(std::size_t at) const {
    if (at >= text_.size()) return "end of input";
    return std::string("'") + text_[at] + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    fail(std::move(expected), describe(pos_));
  }

  [[noreturn]] void fail(std::vector<std::string> expected,
                         const std::string& found) {
    throw parse_error(pos_, std::move(expected), found);
  }

  [[noreturn]] void fail_at(std::size_t at, std::vector<std::string> expected,
                            const std::string& found) {
    throw parse_error(at, std::move(expected), found);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Expanded canonical polynomial over the given variables; variable i of
// the list occupies exponent slot i.
inline MPoly parse_polynomial(std::string_view text,
                              const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).parse();
}

// The (s, t) input language for parametrizations.
inline MPoly parse_poly(std::string_view text) {
  static const std::vector<std::string> vars = {"s", "t"};
  return parse_polynomial(text, vars);
}

}  // namespace mubasis

#endif  // MUBASIS_PARSE_HPP
