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

#include "gradedlnd/spec_file.h"

#include <cctype>
#include <charconv>
#include <set>
#include <tuple>

#include "gradedlnd/error.h"
#include "gradedlnd/polynomial_io.h"

namespace gradedlnd {

RingPtr laurent_names_ring(const Ring& ring) {
  std::vector<Variable> vars = ring.variables();
  for (Variable& v : vars) v.inverted = true;
  return Ring::make(std::move(vars));
}

namespace {

// A slice of one source line with the 1-based column of its first character.
struct Piece {
  std::string_view text;
  int column = 1;
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

Piece trim(Piece p) {
  std::size_t b = 0;
  while (b < p.text.size() && std::isspace(static_cast<unsigned char>(p.text[b]))) ++b;
  std::size_t e = p.text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(p.text[e - 1]))) --e;
  return {p.text.substr(b, e - b), p.column + static_cast<int>(b)};
}

std::vector<Piece> split(Piece p, char sep) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= p.text.size(); ++i) {
    if (i == p.text.size() || p.text[i] == sep) {
      out.push_back(trim({p.text.substr(start, i - start), p.column + static_cast<int>(start)}));
      start = i + 1;
    }
  }
  return out;
}

// Splits at the first occurrence of `token`; nullopt if absent.
std::optional<std::pair<Piece, Piece>> split_once(Piece p, std::string_view token) {
  const std::size_t at = p.text.find(token);
  if (at == std::string_view::npos) return std::nullopt;
  const Piece left = trim({p.text.substr(0, at), p.column});
  const std::size_t r = at + token.size();
  const Piece right = trim({p.text.substr(r), p.column + static_cast<int>(r)});
  return std::make_pair(left, right);
}

std::vector<Piece> words(Piece p) {
  std::vector<Piece> out;
  std::size_t i = 0;
  while (i < p.text.size()) {
    while (i < p.text.size() && std::isspace(static_cast<unsigned char>(p.text[i]))) ++i;
    const std::size_t start = i;
    while (i < p.text.size() && !std::isspace(static_cast<unsigned char>(p.text[i]))) ++i;
    if (i > start) out.push_back({p.text.substr(start, i - start), p.column + static_cast<int>(start)});
  }
  return out;
}

bool is_name(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      lines_.push_back(line);
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  SpecFile parse() {
    std::set<std::string> seen;
    while (next_content()) {
      const Piece header = trim({lines_[line_], 1});
      const auto w = words(header);
      const std::string kind(w[0].text);
      if (kind != "derivation" && w.size() > 1) {
        fail(w[1], "unexpected text after '" + kind + "'");
      }
      static const std::set<std::string> kBlocks = {"ring",    "derivation", "delta",
                                                    "witness", "seeds",      "etale"};
      if (!kBlocks.count(kind)) fail(w[0], "unknown block '" + kind + "'");
      if (kind != "ring" && !spec_.ring) fail(w[0], "the ring block must come first");
      if (kind != "derivation" && !seen.insert(kind).second) {
        fail(w[0], "duplicate " + kind + " block");
      }
      if (kind == "derivation") {
        if (w.size() > 2) fail(w[2], "unexpected text after the derivation name");
        if (w.size() == 2 && !is_name(w[1].text)) fail(w[1], "invalid derivation name");
      }
      ++line_;
      if (kind == "ring") {
        ring_block();
      } else if (kind == "derivation") {
        derivation_block(w.size() == 2 ? std::string(w[1].text) : "");
      } else if (kind == "delta") {
        delta_block();
      } else if (kind == "witness") {
        witness_block();
      } else if (kind == "seeds") {
        seeds_block();
      } else {
        etale_block();
      }
    }
    if (!spec_.ring) {
      throw ParseError(ErrorCode::kSyntaxError, "missing ring block",
                       static_cast<int>(lines_.size()), 1);
    }
    return std::move(spec_);
  }

 private:
  [[noreturn]] void fail(Piece at, const std::string& message,
                         ErrorCode code = ErrorCode::kSyntaxError) const {
    throw ParseError(code, message, line_number(), at.column);
  }

  int line_number() const { return static_cast<int>(line_) + 1; }

  // Advances to the next nonblank line; false at end of input.
  bool next_content() {
    while (line_ < lines_.size() && trim({lines_[line_], 1}).text.empty()) ++line_;
    return line_ < lines_.size();
  }

  // The next body line, or nullopt at "end".
  std::optional<Piece> body_line(std::string_view block) {
    if (!next_content()) {
      throw ParseError(ErrorCode::kSyntaxError,
                       "unterminated " + std::string(block) + " block",
                       static_cast<int>(lines_.size()), 1);
    }
    const Piece p = trim({lines_[line_], 1});
    if (p.text == "end") {
      ++line_;
      return std::nullopt;
    }
    return p;
  }

  Polynomial poly(Piece p, const Ring& ring) const {
    if (p.text.empty()) fail(p, "expected a polynomial");
    return parse_polynomial(p.text, ring, line_number(), p.column);
  }

  std::size_t variable(Piece p) const {
    if (!is_name(p.text)) fail(p, "expected a variable name");
    auto v = spec_.ring->find_variable(p.text);
    if (!v) {
      fail(p, "unknown variable '" + std::string(p.text) + "'", ErrorCode::kUnknownVariable);
    }
    return *v;
  }

  std::int64_t integer(Piece p) const {
    std::int64_t value = 0;
    const char* b = p.text.data();
    const char* e = b + p.text.size();
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || ptr != e) fail(p, "expected an integer");
    return value;
  }

  void ring_block() {
    std::vector<Variable> vars;
    std::vector<std::tuple<std::string_view, int, std::string_view, int, int>> relations;
    std::set<Assertion> assertions;
    while (auto p = body_line("ring")) {
      const auto w = words(*p);
      const std::string_view key = w[0].text;
      if (key == "var") {
        if (w.size() < 2) fail(w[0], "expected a variable name");
        if (!is_name(w[1].text)) fail(w[1], "invalid variable name");
        for (const Variable& v : vars) {
          if (v.name == w[1].text) fail(w[1], "duplicate variable '" + v.name + "'");
        }
        Variable v{std::string(w[1].text), 1, false};
        bool weight_seen = false;
        for (std::size_t k = 2; k < w.size(); ++k) {
          if (w[k].text == "inverted") {
            v.inverted = true;
          } else if (w[k].text.substr(0, 7) == "weight=" && !weight_seen) {
            weight_seen = true;
            v.weight = integer({w[k].text.substr(7), w[k].column + 7});
            if (v.weight == 0) fail(w[k], "weights must be nonzero");
          } else {
            fail(w[k], "unknown key '" + std::string(w[k].text) + "'");
          }
        }
        vars.push_back(std::move(v));
      } else if (key == "relation") {
        auto parts = split_once(*p, ":");
        if (!parts) fail(*p, "expected 'relation lead=NAME : polynomial'");
        const auto head = words(parts->first);
        if (head.size() != 2 || head[1].text.substr(0, 5) != "lead=") {
          fail(head.size() > 1 ? head[1] : head[0], "expected lead=NAME");
        }
        relations.emplace_back(head[1].text.substr(5), head[1].column + 5,
                               parts->second.text, parts->second.column, line_number());
      } else if (key == "assert") {
        if (w.size() < 2) fail(w[0], "expected assertion names");
        for (std::size_t k = 1; k < w.size(); ++k) {
          auto a = parse_assertion(w[k].text);
          if (!a) fail(w[k], "unknown assertion '" + std::string(w[k].text) + "'");
          assertions.insert(*a);
        }
      } else {
        fail(w[0], "unknown key '" + std::string(key) + "'");
      }
      ++line_;
    }
    if (vars.empty()) {
      throw ParseError(ErrorCode::kSyntaxError, "the ring has no variables", line_number() - 1, 1);
    }
    const RingPtr names = Ring::make(vars);
    std::vector<RelationSpec> specs;
    for (const auto& [lead, lead_col, text, col, line] : relations) {
      auto v = names->find_variable(lead);
      if (!v) {
        throw ParseError(ErrorCode::kUnknownVariable,
                         "unknown variable '" + std::string(lead) + "'", line, lead_col);
      }
      if (text.empty()) throw ParseError(ErrorCode::kSyntaxError, "expected a polynomial", line, col);
      specs.push_back({parse_polynomial(text, *names, line, col), *v});
      try {
        Ring::make(vars, specs, assertions);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.code(), e.what(), line, col);
      }
    }
    spec_.ring = Ring::make(std::move(vars), std::move(specs), std::move(assertions));
  }

  void derivation_block(std::string name) {
    DerivationSpec d;
    d.name = std::move(name);
    d.images.assign(spec_.ring->num_vars(), std::nullopt);
    while (auto p = body_line("derivation")) {
      Piece rest = *p;
      // Optional "NAME:" label.
      std::size_t i = 0;
      while (i < rest.text.size() && is_name_char(rest.text[i])) ++i;
      std::size_t j = i;
      while (j < rest.text.size() && rest.text[j] == ' ') ++j;
      if (i > 0 && j < rest.text.size() && rest.text[j] == ':') {
        const Piece label{rest.text.substr(0, i), rest.column};
        if (!d.name.empty() && d.name != label.text) fail(label, "label does not match the block name");
        d.name = std::string(label.text);
        rest = trim({rest.text.substr(j + 1), rest.column + static_cast<int>(j + 1)});
      }
      for (const Piece& mapping : split(rest, ';')) {
        if (mapping.text.empty()) continue;
        auto parts = split_once(mapping, "->");
        if (!parts) fail(mapping, "expected 'variable -> polynomial'");
        const std::size_t v = variable(parts->first);
        if (d.images[v]) fail(parts->first, "variable mapped twice");
        d.images[v] = poly(parts->second, *spec_.ring);
      }
      ++line_;
    }
    spec_.derivations.push_back(std::move(d));
  }

  void delta_block() {
    spec_.has_delta = true;
    const RingPtr laurent = laurent_names_ring(*spec_.ring);
    while (auto p = body_line("delta")) {
      for (const Piece& mapping : split(*p, ';')) {
        if (mapping.text.empty()) continue;
        auto parts = split_once(mapping, "->");
        if (!parts) fail(mapping, "expected 'monomial -> polynomial'");
        Polynomial key = poly(parts->first, *laurent);
        if (!key.is_monomial() || key.terms().begin()->second != 1) {
          fail(parts->first, "expected a monomial");
        }
        for (const auto& [k, img] : spec_.delta) {
          if (k == key) fail(parts->first, "generator mapped twice");
        }
        spec_.delta.emplace_back(std::move(key), poly(parts->second, *laurent));
      }
      ++line_;
    }
  }

  FractionSpec fraction(Piece p) const {
    auto parts = split_once(p, " / ");
    const Ring& ring = *spec_.ring;
    if (!parts) return {poly(p, ring), Polynomial::constant(ring.num_vars(), Rat(1))};
    FractionSpec f{poly(parts->first, ring), poly(parts->second, ring)};
    if (!f.denominator.is_monomial()) fail(parts->second, "the denominator must be a monomial");
    return f;
  }

  void witness_block() {
    std::optional<Polynomial> f;
    std::optional<FractionSpec> t;
    std::vector<FractionSpec> r;
    while (auto p = body_line("witness")) {
      auto parts = split_once(*p, ":");
      if (!parts) fail(*p, "expected 'key: value'");
      const std::string_view key = parts->first.text;
      if (key == "f") {
        if (f) fail(parts->first, "duplicate key 'f'");
        f = poly(parts->second, *spec_.ring);
      } else if (key == "t") {
        if (t) fail(parts->first, "duplicate key 't'");
        t = fraction(parts->second);
      } else if (key == "r") {
        r.push_back(fraction(parts->second));
      } else {
        fail(parts->first, "unknown key '" + std::string(key) + "'");
      }
      ++line_;
    }
    if (!f || !t) {
      throw ParseError(ErrorCode::kSyntaxError, "a witness needs f and t", line_number() - 1, 1);
    }
    spec_.witness = WitnessSpec{std::move(*f), std::move(*t), std::move(r)};
  }

  void seeds_block() {
    spec_.has_seeds = true;
    while (auto p = body_line("seeds")) {
      for (const Piece& item : split(*p, ';')) {
        if (!item.text.empty()) spec_.seeds.push_back(poly(item, *spec_.ring));
      }
      ++line_;
    }
  }

  void etale_block() {
    bool seen = false;
    while (auto p = body_line("etale")) {
      auto parts = split_once(*p, ":");
      if (!parts || parts->first.text != "new") fail(*p, "expected 'new: NAME, ...'");
      if (seen) fail(parts->first, "duplicate key 'new'");
      seen = true;
      for (const Piece& name : split(parts->second, ',')) {
        const std::size_t v = variable(name);
        for (std::size_t x : spec_.etale_new) {
          if (x == v) fail(name, "variable listed twice");
        }
        spec_.etale_new.push_back(v);
      }
      ++line_;
    }
    if (!seen) {
      throw ParseError(ErrorCode::kSyntaxError, "an etale block needs 'new:'", line_number() - 1, 1);
    }
  }

  std::vector<std::string_view> lines_;
  std::size_t line_ = 0;
  SpecFile spec_;
};

std::string print_fraction(const FractionSpec& f, const std::vector<std::string>& names) {
  std::string out = format_polynomial(f.numerator, names);
  if (f.denominator.is_constant() && f.denominator.constant_term() == 1) return out;
  if (f.numerator.size() > 1) out = "(" + out + ")";
  return out + " / " + format_polynomial(f.denominator, names);
}

bool fraction_equal(const FractionSpec& a, const FractionSpec& b) {
  return a.numerator == b.numerator && a.denominator == b.denominator;
}

}  // namespace

SpecFile parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string print_spec(const SpecFile& spec) {
  const Ring& ring = *spec.ring;
  const auto names = variable_names(ring);
  std::string out = "ring\n";
  for (const Variable& v : ring.variables()) {
    out += "  var " + v.name + " weight=" + std::to_string(v.weight);
    if (v.inverted) out += " inverted";
    out += "\n";
  }
  for (const RelationSpec& r : ring.relation_specs()) {
    out += "  relation lead=" + names[r.lead] + " : " + format_polynomial(r.poly, names) + "\n";
  }
  if (!ring.assertions().empty()) {
    out += "  assert";
    for (Assertion a : ring.assertions()) out += " " + std::string(assertion_name(a));
    out += "\n";
  }
  out += "end\n";
  for (const DerivationSpec& d : spec.derivations) {
    out += "\nderivation" + (d.name.empty() ? "" : " " + d.name) + "\n";
    for (std::size_t i = 0; i < d.images.size(); ++i) {
      if (d.images[i]) out += "  " + names[i] + " -> " + format_polynomial(*d.images[i], names) + "\n";
    }
    out += "end\n";
  }
  if (spec.has_delta) {
    out += "\ndelta\n";
    for (const auto& [k, img] : spec.delta) {
      out += "  " + format_polynomial(k, names) + " -> " + format_polynomial(img, names) + "\n";
    }
    out += "end\n";
  }
  if (spec.witness) {
    out += "\nwitness\n  f: " + format_polynomial(spec.witness->f, names) + "\n";
    out += "  t: " + print_fraction(spec.witness->t, names) + "\n";
    for (const FractionSpec& r : spec.witness->r) out += "  r: " + print_fraction(r, names) + "\n";
    out += "end\n";
  }
  if (spec.has_seeds) {
    out += "\nseeds\n";
    for (const Polynomial& s : spec.seeds) out += "  " + format_polynomial(s, names) + "\n";
    out += "end\n";
  }
  if (!spec.etale_new.empty()) {
    out += "\netale\n  new: ";
    for (std::size_t k = 0; k < spec.etale_new.size(); ++k) {
      out += (k ? ", " : "") + names[spec.etale_new[k]];
    }
    out += "\nend\n";
  }
  return out;
}

bool operator==(const SpecFile& a, const SpecFile& b) {
  const Ring& ra = *a.ring;
  const Ring& rb = *b.ring;
  if (ra.variables() != rb.variables() || ra.relation_specs() != rb.relation_specs() ||
      ra.assertions() != rb.assertions() || ra.modulus() != rb.modulus()) {
    return false;
  }
  if (a.derivations.size() != b.derivations.size()) return false;
  for (std::size_t k = 0; k < a.derivations.size(); ++k) {
    if (a.derivations[k].name != b.derivations[k].name ||
        a.derivations[k].images != b.derivations[k].images) {
      return false;
    }
  }
  if (a.has_delta != b.has_delta || a.delta != b.delta) return false;
  if (a.witness.has_value() != b.witness.has_value()) return false;
  if (a.witness) {
    if (!(a.witness->f == b.witness->f) || !fraction_equal(a.witness->t, b.witness->t) ||
        a.witness->r.size() != b.witness->r.size()) {
      return false;
    }
    for (std::size_t k = 0; k < a.witness->r.size(); ++k) {
      if (!fraction_equal(a.witness->r[k], b.witness->r[k])) return false;
    }
  }
  return a.has_seeds == b.has_seeds && a.seeds == b.seeds && a.etale_new == b.etale_new;
}

}  // namespace gradedlnd
