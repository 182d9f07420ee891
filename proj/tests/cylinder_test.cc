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


#include "gradedlnd/cylinder.h"

#include <gtest/gtest.h>

#include <random>

#include "gradedlnd/error.h"
#include "test_util.h"

namespace gradedlnd {
namespace {

using testing::derivation_of;
using testing::el;
using testing::free_ring;

using CV = CylinderCandidate::Verdict;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kSyntaxError;
}

RingPtr plane() { return free_ring({"x", "y"}, {1, 1}); }

LocalFraction frac(const RingPtr& r, const char* num, const char* base, int power) {
  return {el(r, num), el(r, base), power};
}

// Random element of S of residue class 0 modulo m: monomials x^a y^b of S's
// normal form with a + b divisible by m.
RingElem random_class_zero(std::mt19937_64& rng, const Dehomogenization& dh) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> b(0, 6);
  const int m = static_cast<int>(dh.m);
  RingElem out = RingElem::zero(dh.quotient);
  for (int t = 0; t < 4; ++t) {
    const int yb = b(rng);
    const int xa = ((-yb) % m + m) % m;
    out += RingElem::monomial(dh.quotient, Monomial{xa, yb}, Rat(coeff(rng)));
  }
  return out;
}

TEST(DehomogenizeTest, AtX) {
  const RingPtr r = plane();
  const Dehomogenization dh = dehomogenize(r, el(r, "x"));
  EXPECT_EQ(dh.m, 1);
  EXPECT_EQ(dh.rho(el(r, "x")), RingElem::constant(dh.quotient, 1));
  // S = Q[y]: substituting x = 1.
  EXPECT_EQ(dh.rho(el(r, "x^3*y + x*y^2")), el(dh.quotient, "y + y^2"));
  const LocalFraction q = dh.rho_prime_inverse(el(dh.quotient, "y"));
  EXPECT_TRUE(fractions_equal(q, frac(r, "y", "x", 1)));
}

TEST(DehomogenizeTest, AtXSquared) {
  const RingPtr r = plane();
  const RingElem h = el(r, "x^2");
  const Dehomogenization dh = dehomogenize(r, h);
  EXPECT_EQ(dh.m, 2);
  EXPECT_EQ(dh.quotient->modulus(), 2);
  EXPECT_EQ(dh.rho(h), RingElem::constant(dh.quotient, 1));
  const LocalFraction q = dh.rho_prime_inverse(el(dh.quotient, "x*y"));
  EXPECT_TRUE(fractions_equal(q, frac(r, "x*y", "x^2", 1)));

  std::mt19937_64 rng(testing::kSeed + 60);
  for (int trial = 0; trial < 10; ++trial) {
    const RingElem y = random_class_zero(rng, dh);
    const LocalFraction back = dh.rho_prime_inverse(y);
    ASSERT_TRUE(back.numerator.is_homogeneous() || back.numerator.is_zero());
    if (!back.numerator.is_zero()) {
      EXPECT_EQ(*back.numerator.degree(), back.power * 2);
    }
    EXPECT_EQ(dh.rho_prime(back), y);
  }
}

TEST(DehomogenizeTest, RingMapAndInjectiveOnHomogeneous) {
  std::mt19937_64 rng(testing::kSeed + 61);
  const RingPtr r = plane();
  const Dehomogenization dh = dehomogenize(r, el(r, "x^2"));
  for (int trial = 0; trial < 20; ++trial) {
    const RingElem a(r, testing::random_polynomial(rng, 2, {0, 1}, 4, 4));
    const RingElem b(r, testing::random_polynomial(rng, 2, {0, 1}, 4, 4));
    EXPECT_EQ(dh.rho(a * b), dh.rho(a) * dh.rho(b));
    EXPECT_EQ(dh.rho(a + b), dh.rho(a) + dh.rho(b));
    for (const auto& [deg, comp] : homogeneous_components(a * b)) {
      if (deg <= 6) EXPECT_FALSE(dh.rho(comp).is_zero());
    }
  }
}

TEST(DehomogenizeTest, Errors) {
  const RingPtr r = free_ring({"x", "y"}, {1, -1});
  EXPECT_EQ(code_of([&] { dehomogenize(r, el(r, "x*y")); }),
            ErrorCode::kDegreeZeroDehomogenization);
  const RingPtr p = plane();
  EXPECT_EQ(code_of([&] { dehomogenize(p, el(p, "x^2*y + x*y^2")); }),
            ErrorCode::kUnsupportedDenominator);
}

TEST(CylinderToLndTest, DegreeOne) {
  const RingPtr r = plane();
  const CylinderWitness w{el(r, "x"), frac(r, "y", "x", 1), {}};
  const CylinderLnd c = cylinder_to_lnd(r, w, 1);
  EXPECT_EQ(c.n, 0);
  const Derivation d = to_derivation(c.derivation);
  EXPECT_EQ(d, derivation_of(r, {"0", "x"}));
  EXPECT_TRUE(certify_lnd(d).nilpotent());
  EXPECT_EQ(c.derivation.apply(c.preimage), c.image);
}

TEST(CylinderToLndTest, DegreeTwo) {
  const RingPtr r = plane();
  const CylinderWitness w{el(r, "x^2"), frac(r, "y", "x", 1), {}};
  const CylinderLnd c = cylinder_to_lnd(r, w, 2);
  EXPECT_EQ(c.n, 0);
  const VeroneseDerivation& d = c.derivation;
  EXPECT_TRUE(d.apply(el(r, "x^2")).is_zero());
  EXPECT_EQ(d.apply(el(r, "x*y")), el(r, "x^2"));
  EXPECT_EQ(d.apply(el(r, "y^2")), el(r, "2*x*y"));
  // Leibniz from t = y/x: D(x^a y^b) = b x^(a+1) y^(b-1) on even a + b.
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      if ((a + b) % 2) continue;
      const RingElem img = d.apply(RingElem::monomial(r, Monomial{a, b}));
      EXPECT_TRUE(in_veronese(img, 2));
      const RingElem expect =
          b ? RingElem::monomial(r, Monomial{a + 1, b - 1}, Rat(b)) : RingElem::zero(r);
      EXPECT_EQ(img, expect);
    }
  }
  EXPECT_TRUE(certify_lnd(d).nilpotent());
  EXPECT_TRUE(d.apply(w.f).is_zero());
}

TEST(CylinderToLndTest, InconsistentWitness) {
  const RingPtr r = plane();
  const CylinderWitness w{el(r, "x"), frac(r, "y^2", "x", 2), {}};
  EXPECT_EQ(code_of([&] { cylinder_to_lnd(r, w, 1); }),
            ErrorCode::kIntegralityBoundExceeded);
}

TEST(CylinderToLndTest, WitnessChecks) {
  const RingPtr r = plane();
  const CylinderWitness ok{el(r, "x"), frac(r, "y", "x", 1), {}};
  EXPECT_EQ(cylinder_to_lnd(r, ok, 1).witness_checks.size(), 3u);
  const CylinderWitness constant{el(r, "x"), frac(r, "x", "x", 1), {}};
  EXPECT_EQ(code_of([&] { cylinder_to_lnd(r, constant, 1); }),
            ErrorCode::kInvalidArgument);
  const CylinderWitness repeated{el(r, "x"), frac(r, "y", "x", 1), {frac(r, "y", "x", 1)}};
  EXPECT_EQ(code_of([&] { cylinder_to_lnd(r, repeated, 1); }),
            ErrorCode::kInvalidArgument);
  const CylinderWitness in_r{el(r, "x"), frac(r, "y^2", "x", 2), {frac(r, "y", "x", 1)}};
  EXPECT_EQ(code_of([&] { cylinder_to_lnd(r, in_r, 1); }), ErrorCode::kInvalidArgument);
}

TEST(CandidateTest, LinearImage) {
  const RingPtr r = plane();
  const Derivation d = derivation_of(r, {"0", "x"});
  const CylinderCandidate c =
      lnd_to_cylindrical_candidate(d, certify_lnd(d), {el(r, "x")});
  ASSERT_EQ(c.verdict, CV::kCertified);
  EXPECT_EQ(*c.h, el(r, "x"));
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_TRUE(fractions_equal(c.witness->t, frac(r, "y", "x", 1)));
  EXPECT_TRUE(c.witness->R_generators.empty());
  EXPECT_EQ(d.apply(*c.beta), *c.h);
}

TEST(CandidateTest, QuadraticImage) {
  const RingPtr r = plane();
  const Derivation d = derivation_of(r, {"0", "x^2"});
  const CylinderCandidate c =
      lnd_to_cylindrical_candidate(d, certify_lnd(d), {el(r, "x")});
  ASSERT_EQ(c.verdict, CV::kCertified);
  EXPECT_EQ(*c.h, el(r, "x^2"));
  // B_(x^2) is generated by xy/x^2 and y^2/x^2, both polynomials in y/x.
  EXPECT_TRUE(fractions_equal(c.witness->t, frac(r, "y", "x", 1)))
      << format_fraction(c.witness->t);
}

TEST(CandidateTest, Errors) {
  const RingPtr r = plane();
  const Derivation zero = Derivation::zero(r);
  EXPECT_EQ(code_of([&] {
              lnd_to_cylindrical_candidate(zero, certify_lnd(zero), {el(r, "x")});
            }),
            ErrorCode::kNotHomogeneous);
  const Derivation inhom = derivation_of(r, {"1", "x"});
  EXPECT_EQ(code_of([&] {
              lnd_to_cylindrical_candidate(inhom, certify_lnd(inhom), {el(r, "y")});
            }),
            ErrorCode::kNotHomogeneous);
  const Derivation d = derivation_of(r, {"0", "x"});
  EXPECT_EQ(code_of([&] {
              lnd_to_cylindrical_candidate(d, NilpotencyCertificate{}, {el(r, "x")});
            }),
            ErrorCode::kNilpotencyUnverified);
  EXPECT_EQ(code_of([&] { lnd_to_cylindrical_candidate(d, certify_lnd(d), {el(r, "1")}); }),
            ErrorCode::kKernelInDegreeZero);
}

TEST(RoundTripTest, CylinderThenCandidate) {
  const RingPtr r = plane();
  for (const char* f : {"x", "2*x"}) {
    const RingElem fe = el(r, f);
    const CylinderWitness w{fe, frac(r, "y", "x", 1), {}};
    const Derivation d = to_derivation(cylinder_to_lnd(r, w, 1).derivation);
    const CylinderCandidate c = lnd_to_cylindrical_candidate(d, certify_lnd(d), {fe});
    ASSERT_EQ(c.verdict, CV::kCertified) << f;
    // h is a power of f up to a nonzero scalar.
    ASSERT_TRUE(c.h->is_term());
    const auto& [hm, hc] = *c.h->poly().terms().begin();
    EXPECT_EQ(hm[1], 0);
    EXPECT_GT(hm[0], 0);
    EXPECT_NE(hc, 0);
  }
}

}  // namespace
}  // namespace gradedlnd
