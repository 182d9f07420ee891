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

#include "gradedlnd/arith.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "gradedlnd/error.h"

namespace gradedlnd {

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat factorial(unsigned n) {
  Int result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return Rat(result);
}

GcdWitness gcd_with_witness(std::span<const Int> xs) {
  if (xs.empty()) throw Error(ErrorCode::kEmptyInput, "gcd of an empty list");
  GcdWitness out;
  out.coefficients.assign(xs.size(), Int(0));
  out.gcd = abs(xs[0]);
  out.coefficients[0] = sgn(xs[0]) < 0 ? -1 : 1;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    // Extended Euclid on (gcd so far, xs[i]).
    Int a = out.gcd, b = abs(xs[i]);
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
      Int q = a / b;
      Int r = a - q * b;
      a = b;
      b = r;
      Int s2 = s0 - q * s1;
      s0 = s1;
      s1 = s2;
      Int t2 = t0 - q * t1;
      t0 = t1;
      t1 = t2;
    }
    for (std::size_t j = 0; j < i; ++j) out.coefficients[j] *= s0;
    out.coefficients[i] = sgn(xs[i]) < 0 ? Int(-t0) : t0;
    out.gcd = a;
  }
  return out;
}

Int gcd_of_set(std::span<const Int> xs) {
  if (xs.empty()) throw Error(ErrorCode::kEmptyInput, "gcd of an empty list");
  Int g = 0;
  for (const Int& x : xs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

Int gcd_of_set(std::initializer_list<Int> xs) {
  return gcd_of_set(std::span<const Int>(xs.begin(), xs.size()));
}

std::int64_t gcd_of_set(std::span<const std::int64_t> xs) {
  if (xs.empty()) throw Error(ErrorCode::kEmptyInput, "gcd of an empty list");
  std::int64_t g = 0;
  for (std::int64_t x : xs) g = std::gcd(g, x);
  return g;
}

Int lcm_of_set(std::span<const Int> xs) {
  if (xs.empty()) throw Error(ErrorCode::kEmptyInput, "lcm of an empty list");
  Int l = 1;
  for (const Int& x : xs) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_mpz_t());
  }
  return l;
}

bool CongruenceMonoid::contains(std::span<const int> k) const {
  if (k.size() != weights.size()) return false;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0) return false;
    total += k[i] * weights[i];
  }
  return total % modulus == 0;
}

namespace {

// Componentwise-minimal nonzero points of the box prod [0, bounds_i] that
// satisfy `member`. Points are visited by increasing coordinate sum, so a
// point is minimal exactly when no previously accepted point lies below it.
std::vector<std::vector<int>> minimal_points_in_box(
    const std::vector<int>& bounds,
    const std::function<bool(const std::vector<int>&)>& member) {
  const std::size_t r = bounds.size();
  int max_sum = 0;
  for (int b : bounds) max_sum += b;

  std::vector<std::vector<int>> basis;
  std::vector<int> point(r, 0);

  auto below_some_basis = [&](const std::vector<int>& p) {
    for (const auto& b : basis) {
      bool le = true;
      for (std::size_t i = 0; i < r && le; ++i) le = b[i] <= p[i];
      if (le) return true;
    }
    return false;
  };

  // Enumerate points with a fixed coordinate sum in lexicographically
  // decreasing order.
  std::function<void(std::size_t, int, std::vector<std::vector<int>>&)> fill =
      [&](std::size_t i, int remaining, std::vector<std::vector<int>>& found) {
        if (i + 1 == r) {
          if (remaining > bounds[i]) return;
          point[i] = remaining;
          if (member(point) && !below_some_basis(point)) found.push_back(point);
          return;
        }
        for (int v = std::min(remaining, bounds[i]); v >= 0; --v) {
          point[i] = v;
          fill(i + 1, remaining - v, found);
        }
      };

  for (int s = 1; s <= max_sum; ++s) {
    std::vector<std::vector<int>> found;
    fill(0, s, found);
    basis.insert(basis.end(), found.begin(), found.end());
  }
  return basis;
}

}  // namespace

std::vector<std::vector<int>> hilbert_basis(const CongruenceMonoid& monoid) {
  if (monoid.modulus <= 0) {
    throw Error(ErrorCode::kInvalidModulus,
                "congruence modulus must be positive, got " +
                    std::to_string(monoid.modulus));
  }
  if (monoid.weights.empty()) {
    throw Error(ErrorCode::kEmptyInput, "congruence monoid without weights");
  }
  std::vector<int> bounds(monoid.weights.size(),
                          static_cast<int>(monoid.modulus));
  return minimal_points_in_box(bounds, [&](const std::vector<int>& k) {
    return monoid.contains(k);
  });
}

std::vector<std::vector<int>> kernel_hilbert_basis(
    std::span<const std::int64_t> coefficients) {
  if (coefficients.empty()) {
    throw Error(ErrorCode::kEmptyInput, "linear form without coefficients");
  }
  std::int64_t max_pos = 0, max_neg = 0;
  for (std::int64_t a : coefficients) {
    if (a > 0) max_pos = std::max(max_pos, a);
    if (a < 0) max_neg = std::max(max_neg, -a);
  }
  std::vector<int> bounds;
  for (std::int64_t a : coefficients) {
    if (a > 0) bounds.push_back(static_cast<int>(max_neg));
    else if (a < 0) bounds.push_back(static_cast<int>(max_pos));
    else bounds.push_back(1);
  }
  return minimal_points_in_box(bounds, [&](const std::vector<int>& x) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) total += coefficients[i] * x[i];
    return total == 0;
  });
}

CoprimeWitness coprime_in_monoid(std::span<const std::int64_t> generators,
                                 std::int64_t d) {
  if (generators.empty()) {
    throw Error(ErrorCode::kEmptyInput, "monoid without generators");
  }
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "d must be nonzero");
  std::int64_t g = 0, largest = 0;
  for (std::int64_t x : generators) {
    if (x < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "monoid generators must be nonnegative");
    }
    g = std::gcd(g, x);
    largest = std::max(largest, x);
  }
  const std::int64_t abs_d = std::llabs(d);
  if (std::gcd(g, abs_d) != 1) {
    throw Error(ErrorCode::kNoCoprimeExists,
                "gcd(gcd(generators), d) = " +
                    std::to_string(std::gcd(g, abs_d)) + " != 1");
  }
  // Every multiple of g beyond the Frobenius number (< largest^2) lies in
  // the monoid, and g * k with gcd(k, d) == 1 exists for k <= |d| + 1.
  const std::int64_t limit = largest * largest + g * (abs_d + 1) + largest;
  std::vector<int> via(static_cast<std::size_t>(limit) + 1, -1);
  via[0] = static_cast<int>(generators.size());  // sentinel: reached as empty sum
  for (std::int64_t v = 0; v <= limit; ++v) {
    if (v > 0) {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        const std::int64_t x = generators[i];
        if (x > 0 && x <= v && via[static_cast<std::size_t>(v - x)] >= 0) {
          via[static_cast<std::size_t>(v)] = static_cast<int>(i);
          break;
        }
      }
    }
    if (via[static_cast<std::size_t>(v)] < 0 || std::gcd(v, abs_d) != 1) continue;
    CoprimeWitness out;
    out.value = v;
    out.coefficients.assign(generators.size(), 0);
    for (std::int64_t w = v; w > 0;) {
      const int i = via[static_cast<std::size_t>(w)];
      ++out.coefficients[static_cast<std::size_t>(i)];
      w -= generators[static_cast<std::size_t>(i)];
    }
    return out;
  }
  throw Error(ErrorCode::kNoCoprimeExists, "search bound exhausted");
}

PrimeSet::PrimeSet(std::vector<Int> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(const Int& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
  return std::includes(other.primes_.begin(), other.primes_.end(),
                       primes_.begin(), primes_.end());
}

bool PrimeSet::divides_any(const Int& n) const {
  for (const Int& p : primes_) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return true;
  }
  return false;
}

PrimeSet PrimeSet::united(const PrimeSet& other) const {
  std::vector<Int> all = primes_;
  all.insert(all.end(), other.primes_.begin(), other.primes_.end());
  return PrimeSet(std::move(all));
}

std::string PrimeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ",";
    out += primes_[i].get_str();
  }
  return out + "}";
}

namespace {

constexpr unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const Int& n) {
  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned a : kWitnesses) {
    Int x;
    Int base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Pollard rho (Floyd cycle detection); returns a nontrivial factor of a
// composite n.
Int pollard_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned c = 1;; ++c) {
    Int x = 2, y = 2, factor = 1;
    auto step = [&](const Int& v) { return Int((v * v + c) % n); };
    while (factor == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = abs(x - y);
      mpz_gcd(factor.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (factor != n) return factor;
  }
}

void collect_factors(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int f = pollard_rho(n);
  collect_factors(f, out);
  collect_factors(n / f, out);
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 43 * 43) return true;
  return miller_rabin(n);
}

PrimeSet prime_factors(const Int& n) {
  if (n == 0) {
    throw Error(ErrorCode::kZeroHasAllPrimes, "every prime divides 0");
  }
  Int m = abs(n);
  std::vector<Int> found;
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      found.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
  }
  collect_factors(m, found);
  return PrimeSet(std::move(found));
}

}  // namespace gradedlnd
