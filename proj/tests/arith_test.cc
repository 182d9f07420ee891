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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gradedlnd/error.h"
#include "test_util.h"

namespace gradedlnd {
namespace {

using Vec = std::vector<int>;

bool congruent(const Vec& k, const std::vector<std::int64_t>& w, std::int64_t d) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * w[i];
  return ((s % d) + d) % d == 0;
}

// All vectors of [0, bound]^r in lexicographic order.
std::vector<Vec> box(std::size_t r, int bound) {
  std::vector<Vec> out;
  Vec k(r, 0);
  while (true) {
    out.push_back(k);
    std::size_t i = 0;
    while (i < r && k[i] == bound) k[i++] = 0;
    if (i == r) break;
    ++k[i];
  }
  return out;
}

bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Minimal nonzero monoid elements inside [0, 2d]^r.
std::set<Vec> oracle_basis(const std::vector<std::int64_t>& w, std::int64_t d) {
  std::vector<Vec> members;
  for (const Vec& k : box(w.size(), static_cast<int>(2 * d))) {
    if (std::any_of(k.begin(), k.end(), [](int x) { return x != 0; }) &&
        congruent(k, w, d)) {
      members.push_back(k);
    }
  }
  std::set<Vec> out;
  for (const Vec& k : members) {
    bool minimal = true;
    for (const Vec& j : members) {
      if (j != k && leq(j, k)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(k);
  }
  return out;
}

// Every monoid element of [0, bound]^r is a sum of basis vectors.
bool generates_box(const std::vector<Vec>& basis, const std::vector<std::int64_t>& w,
                   std::int64_t d, int bound) {
  const std::vector<Vec> all = box(w.size(), bound);
  std::set<Vec> reachable{Vec(w.size(), 0)};
  for (const Vec& k : all) {
    if (reachable.count(k)) continue;
    for (const Vec& g : basis) {
      if (!leq(g, k)) continue;
      Vec rest = k;
      for (std::size_t i = 0; i < k.size(); ++i) rest[i] -= g[i];
      if (reachable.count(rest)) {
        reachable.insert(k);
        break;
      }
    }
  }
  for (const Vec& k : all) {
    if (congruent(k, w, d) && !reachable.count(k)) return false;
  }
  return true;
}

TEST(GcdTest, Examples) {
  EXPECT_EQ(gcd_of_set({Int(15), Int(10), Int(6)}), 1);
  EXPECT_EQ(gcd_of_set({Int(0)}), 0);
  EXPECT_EQ(gcd_of_set({Int(-4), Int(6)}), 2);
  const std::vector<std::int64_t> small{-12, 18, 30};
  EXPECT_EQ(gcd_of_set(std::span<const std::int64_t>(small)), 6);
}

TEST(GcdTest, EmptyInput) {
  try {
    gcd_of_set(std::span<const Int>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(GcdTest, WitnessAndInvariance) {
  std::mt19937_64 rng(testing::kSeed);
  std::uniform_int_distribution<int> val(-200, 200);
  std::uniform_int_distribution<int> len(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> xs;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) xs.emplace_back(val(rng));
    const GcdWitness w = gcd_with_witness(xs);
    Int combo = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      combo += w.coefficients[i] * xs[i];
      if (w.gcd != 0) {
        EXPECT_EQ(Int(xs[i] % w.gcd), 0);
      }
    }
    EXPECT_EQ(combo, w.gcd);
    EXPECT_GE(w.gcd, 0);
    std::vector<Int> flipped = xs;
    std::reverse(flipped.begin(), flipped.end());
    for (Int& x : flipped) x = -x;
    EXPECT_EQ(gcd_of_set(flipped), w.gcd);
  }
}

TEST(LcmTest, Basic) {
  const std::vector<Int> xs{Int(4), Int(6), Int(10)};
  EXPECT_EQ(lcm_of_set(xs), 60);
  const std::vector<Int> with_zero{Int(4), Int(0)};
  EXPECT_EQ(lcm_of_set(with_zero), 0);
}

TEST(HilbertBasisTest, Examples) {
  using B = std::vector<Vec>;
  auto sorted = [](B b) {
    std::sort(b.begin(), b.end());
    return b;
  };
  EXPECT_EQ(sorted(hilbert_basis({{1, 1}, 2})), sorted(B{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(sorted(hilbert_basis({{1, -1}, 2})), sorted(B{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(sorted(hilbert_basis({{2, 3}, 5})), sorted(B{{1, 1}, {5, 0}, {0, 5}}));
  EXPECT_EQ(sorted(hilbert_basis({{4, -7, 9}, 1})),
            sorted(B{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(HilbertBasisTest, InvalidModulus) {
  try {
    hilbert_basis({{1, 2}, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidModulus);
  }
}

TEST(HilbertBasisTest, MatchesOracleAndGenerates) {
  std::mt19937_64 rng(testing::kSeed + 1);
  std::uniform_int_distribution<int> rdist(1, 3);
  std::uniform_int_distribution<int> wdist(-5, 5);
  std::uniform_int_distribution<int> ddist(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rdist(rng));
    std::vector<std::int64_t> w;
    while (w.size() < r) {
      const int x = wdist(rng);
      if (x != 0) w.push_back(x);
    }
    const std::int64_t d = ddist(rng);
    const auto basis = hilbert_basis({w, d});
    std::set<Vec> got(basis.begin(), basis.end());
    EXPECT_EQ(got, oracle_basis(w, d));
    for (const Vec& k : basis) {
      EXPECT_TRUE(congruent(k, w, d));
      for (int x : k) EXPECT_LE(x, d);
      for (const Vec& j : basis) {
        if (j != k) EXPECT_FALSE(leq(j, k));
      }
    }
    if (r <= 2 || d <= 4) {
      EXPECT_TRUE(generates_box(basis, w, d, static_cast<int>(3 * d)));
    }
  }
}

TEST(KernelHilbertBasisTest, DegreeZeroLocalization) {
  // 2a + 3b - 5m == 0
  const std::vector<std::int64_t> c{2, 3, -5};
  auto basis = kernel_hilbert_basis(c);
  std::sort(basis.begin(), basis.end());
  std::vector<Vec> expected{{0, 5, 3}, {1, 1, 1}, {5, 0, 2}};
  EXPECT_EQ(basis, expected);
}

std::int64_t brute_coprime(const std::vector<std::int64_t>& gens, std::int64_t d) {
  const std::int64_t limit = 2000;
  std::vector<bool> in(limit + 1, false);
  in[0] = true;
  for (std::int64_t v = 0; v <= limit; ++v) {
    if (!in[v]) continue;
    if (std::gcd(v, d) == 1) return v;
    for (std::int64_t g : gens) {
      if (g > 0 && v + g <= limit) in[v + g] = true;
    }
  }
  return -1;
}

TEST(CoprimeInMonoidTest, Examples) {
  const std::vector<std::int64_t> a{6, 10, 15};
  EXPECT_EQ(coprime_in_monoid(a, 7).value, 6);
  const std::vector<std::int64_t> b{4, 6};
  EXPECT_EQ(coprime_in_monoid(b, 3).value, 4);
  const std::vector<std::int64_t> c{5};
  EXPECT_EQ(coprime_in_monoid(c, 1).value, 0);
  const std::vector<std::int64_t> e{2, 3};
  EXPECT_EQ(coprime_in_monoid(e, 6).value, 5);
}

TEST(CoprimeInMonoidTest, NoCoprime) {
  const std::vector<std::int64_t> a{4, 6};
  try {
    coprime_in_monoid(a, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoCoprimeExists);
  }
}

TEST(CoprimeInMonoidTest, MatchesBruteForceWithWitness) {
  std::mt19937_64 rng(testing::kSeed + 2);
  std::uniform_int_distribution<int> gdist(1, 40);
  std::uniform_int_distribution<int> ddist(1, 60);
  std::uniform_int_distribution<int> ndist(1, 4);
  int checked = 0;
  while (checked < 100) {
    std::vector<std::int64_t> gens;
    const int n = ndist(rng);
    for (int i = 0; i < n; ++i) gens.push_back(gdist(rng));
    const std::int64_t d = ddist(rng);
    std::int64_t g = d;
    for (std::int64_t x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    const CoprimeWitness w = coprime_in_monoid(gens, d);
    EXPECT_EQ(w.value, brute_coprime(gens, d));
    std::int64_t combo = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      EXPECT_GE(w.coefficients[i], 0);
      combo += w.coefficients[i] * gens[i];
    }
    EXPECT_EQ(combo, w.value);
    ++checked;
  }
}

TEST(PrimeTest, Factors) {
  EXPECT_EQ(prime_factors(Int(900)), PrimeSet({Int(2), Int(3), Int(5)}));
  EXPECT_TRUE(prime_factors(Int(1)).empty());
  EXPECT_EQ(prime_factors(Int(-7)), PrimeSet({Int(7)}));
  EXPECT_EQ(prime_factors(Int(900)).to_string(), "{2,3,5}");
  try {
    prime_factors(Int(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroHasAllPrimes);
  }
}

TEST(PrimeTest, MillerRabinAgreesWithTrialDivision) {
  auto trial = [](long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p) {
      if (n % p == 0) return false;
    }
    return true;
  };
  for (long n = -5; n < 5000; ++n) EXPECT_EQ(is_prime(Int(n)), trial(n)) << n;
  EXPECT_TRUE(is_prime(Int("170141183460469231731687303715884105727")));
  EXPECT_FALSE(is_prime(Int("3215031751")));  // strong pseudoprime to 2,3,5,7
}

TEST(RatTest, TextForm) {
  EXPECT_EQ(to_string(Rat(3, 2)), "3/2");
  EXPECT_EQ(to_string(Rat(-2)), "-2");
  EXPECT_EQ(to_string(Rat(-1, 3)), "-1/3");
  EXPECT_EQ(to_string(Rat(0)), "0");
  EXPECT_EQ(factorial(5), 120);
}

}  // namespace
}  // namespace gradedlnd
