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

#ifndef GRADEDLND_ARITH_H_
#define GRADEDLND_ARITH_H_

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gradedlnd {

using Int = mpz_class;
using Rat = mpq_class;

// Exact text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Int& value);
std::string to_string(const Rat& value);

Rat factorial(unsigned n);

/// gcd of a nonempty list together with Bezout coefficients, so that
/// sum(coefficients[i] * xs[i]) == gcd. The gcd is nonnegative and gcd({0}) == 0.
struct GcdWitness {
  Int gcd;
  std::vector<Int> coefficients;
};

GcdWitness gcd_with_witness(std::span<const Int> xs);
Int gcd_of_set(std::span<const Int> xs);
Int gcd_of_set(std::initializer_list<Int> xs);
std::int64_t gcd_of_set(std::span<const std::int64_t> xs);

// lcm of a nonempty list; lcm involving 0 is 0.
Int lcm_of_set(std::span<const Int> xs);

/// The monoid { k in N^r : sum k_i * weights_i == 0 (mod modulus) }.
struct CongruenceMonoid {
  std::vector<std::int64_t> weights;
  std::int64_t modulus = 1;

  bool contains(std::span<const int> k) const;
};

/// Minimal generating set of the monoid, sorted by coordinate sum and then
/// lexicographically. Coordinates never exceed the modulus.
std::vector<std::vector<int>> hilbert_basis(const CongruenceMonoid& monoid);

/// Minimal generating set of { x in N^r : sum coefficients_i * x_i == 0 }.
/// A coordinate whose coefficient is positive is bounded by the largest
/// negative coefficient in absolute value, and symmetrically.
std::vector<std::vector<int>> kernel_hilbert_basis(
    std::span<const std::int64_t> coefficients);

/// Smallest m in the monoid generated by `generators` with gcd(m, d) == 1,
/// and a witness combination m == sum coefficients_i * generators_i.
struct CoprimeWitness {
  std::int64_t value = 0;
  std::vector<std::int64_t> coefficients;
};

CoprimeWitness coprime_in_monoid(std::span<const std::int64_t> generators,
                                 std::int64_t d);

/// Strictly increasing list of primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<Int> primes);

  const std::vector<Int>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  bool contains(const Int& p) const;
  bool is_subset_of(const PrimeSet& other) const;
  bool divides_any(const Int& n) const;  // some element divides n
  PrimeSet united(const PrimeSet& other) const;
  std::string to_string() const;  // "{2,3,5}"

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<Int> primes_;
};

// Deterministic Miller-Rabin with the first thirteen primes as witnesses;
// exact below 3.3e24, trial division is used for small inputs.
bool is_prime(const Int& n);

PrimeSet prime_factors(const Int& n);

}  // namespace gradedlnd

#endif  // GRADEDLND_ARITH_H_
