// Copyright 2026 The gradedlnd Authors
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

#include "gradedlnd/polynomial_io.h"

#include <algorithm>
#include <cctype>

#include "gradedlnd/error.h"

namespace gradedlnd {

std::vector<std::string> variable_names(const Ring& ring) {
  std::vector<std::string> names;
  for (const Variable& v : ring.variables()) names.push_back(v.name);
  return names;
}

std::string format_monomial(const Monomial& m,
                            const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p,
                              const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rat magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    if (constant) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += format_monomial(m, names);
    }
  }
  return out;
}

std::string format(const RingElem& e) {
  return format_polynomial(e.poly(), variable_names(*e.ring()));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, int line, int first_column)
      : text_(text), ring_(ring), line_(line), first_column_(first_column) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("expected a polynomial");
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorCode::kSyntaxError, message, line_,
                     first_column_ + static_cast<int>(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial sum(ring_.num_vars());
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    while (true) {
      Polynomial t = term();
      if (negate) sum -= t; else sum += t;
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return sum;
      }
    }
  }

  Polynomial term() {
    Polynomial product = factor();
    while (accept('*')) product = product * factor();
    return product;
  }

  Int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  int exponent() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    Int value = integer();
    if (value > 100000) {
      pos_ = start;
      fail("exponent too large");
    }
    const int e = static_cast<int>(value.get_si());
    return negative ? -e : e;
  }

  Polynomial factor() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    const std::size_t n = ring_.num_vars();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rat value(integer());
      if (accept('/')) {
        const std::size_t at = pos_;
        Int den = integer();
        if (den == 0) {
          pos_ = at;
          fail("division by zero");
        }
        value /= Rat(den);
        value.canonicalize();
      }
      return Polynomial::constant(n, value);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) {
        const std::size_t at = pos_;
        int e = exponent();
        if (e < 0) {
          pos_ = at;
          fail("negative exponent on a parenthesized expression");
        }
        inner = inner.pow(static_cast<unsigned>(e));
      }
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      auto var = ring_.find_variable(name);
      if (!var) {
        pos_ = start;
        throw ParseError(ErrorCode::kUnknownVariable,
                         "unknown variable '" + name + "'", line_,
                         first_column_ + static_cast<int>(start));
      }
      int e = 1;
      if (accept('^')) {
        const std::size_t at = pos_;
        e = exponent();
        if (e < 0 && !ring_.variable(*var).inverted) {
          pos_ = at;
          fail("negative exponent on non-inverted variable '" + name + "'");
        }
      }
      return Polynomial::variable(n, *var, e);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  int line_;
  int first_column_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, int line,
                            int first_column) {
  return Parser(text, ring, line, first_column).parse();
}

RingElem parse_element(std::string_view text, const RingPtr& ring, int line,
                       int first_column) {
  return RingElem(ring, parse_polynomial(text, *ring, line, first_column));
}

}  // namespace gradedlnd
