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

#include "gradedlnd/polynomial.h"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace gradedlnd {

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Monomial unit_monomial(std::size_t nvars, std::size_t var, int power) {
  Monomial m(nvars, 0);
  m[var] = power;
  return m;
}

int total_degree(const Monomial& m) {
  int total = 0;
  for (int e : m) total += std::abs(e);
  return total;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var, int power) {
  Polynomial p(nvars);
  p.add_term(unit_monomial(nvars, var, power), Rat(1));
  return p;
}

Polynomial Polynomial::term(Monomial m, const Rat& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Polynomial::constant_term() const {
  return coefficient(Monomial(nvars_, 0));
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(monomial_product(ma, mb), ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rat& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [mon, coeff] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), monomial_product(mon, m), coeff * c);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(nvars_, Rat(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm(m);
    dm[var] -= 1;
    out.add_term(dm, c * m[var]);
  }
  return out;
}

Polynomial Polynomial::with_zeroed(std::span<const std::size_t> vars) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    bool vanishes = false;
    for (std::size_t v : vars) vanishes = vanishes || m[v] > 0;
    if (!vanishes) out.add_term(m, c);
  }
  return out;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& [m, c] : terms_) {
    if (m[var] != 0) return true;
  }
  return false;
}

int Polynomial::max_exponent(std::size_t var) const {
  int best = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) best = std::max(best, m[var]);
  return terms_.empty() ? 0 : best;
}

int Polynomial::min_exponent(std::size_t var) const {
  int best = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) best = std::min(best, m[var]);
  return terms_.empty() ? 0 : best;
}

}  // namespace gradedlnd
