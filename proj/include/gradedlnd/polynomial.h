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

#ifndef GRADEDLND_POLYNOMIAL_H_
#define GRADEDLND_POLYNOMIAL_H_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "gradedlnd/arith.h"

namespace gradedlnd {

// Exponent vector. Negative entries are only meaningful for variables that
// the owning ring declares inverted.
using Monomial = std::vector<int>;

Monomial monomial_product(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const Monomial& a, const Monomial& b);
Monomial unit_monomial(std::size_t nvars, std::size_t var, int power = 1);
int total_degree(const Monomial& m);  // sum of absolute exponents

// Sparse Laurent polynomial over Q. Terms are keyed by exponent vector in
// lexicographic order (first variable most significant); zero coefficients
// are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rat>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rat& c);
  static Polynomial variable(std::size_t nvars, std::size_t var, int power = 1);
  static Polynomial term(Monomial m, const Rat& c);

  std::size_t num_vars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rat coefficient(const Monomial& m) const;
  Rat constant_term() const;

  void add_term(const Monomial& m, const Rat& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rat& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
  friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial times_monomial(const Monomial& m, const Rat& c = Rat(1)) const;
  Polynomial pow(unsigned n) const;

  // d/dx_var, valid for negative exponents as well.
  Polynomial derivative(std::size_t var) const;

  // Sets the listed variables to zero (terms containing them vanish).
  Polynomial with_zeroed(std::span<const std::size_t> vars) const;

  bool involves(std::size_t var) const;
  int max_exponent(std::size_t var) const;
  int min_exponent(std::size_t var) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace gradedlnd

#endif  // GRADEDLND_POLYNOMIAL_H_
