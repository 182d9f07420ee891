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


#include "gradedlnd/analysis.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gradedlnd/error.h"
#include "test_util.h"

namespace gradedlnd {
namespace {

using testing::ring_of;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kSyntaxError;
}

PrimeSet primes(std::initializer_list<long> ps) {
  std::vector<Int> v;
  for (long p : ps) v.emplace_back(p);
  return PrimeSet(std::move(v));
}

RingPtr cross_term_ring() {
  return ring_of(R"(ring
  var X1
  var X2
  var X3
  relation lead=X3 : X1*X2 + X3^2
end
)");
}

TEST(EInvariantsTest, Examples) {
  const std::vector<std::int64_t> a{15, 10, 6}, b{3, 2, 1}, c{5, 5}, one{4};
  EXPECT_EQ(e_invariants(a), (std::vector<std::int64_t>{2, 3, 5}));
  EXPECT_EQ(e_invariants(b), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(e_invariants(c), (std::vector<std::int64_t>{5, 5}));
  EXPECT_EQ(code_of([&] { e_invariants(one); }), ErrorCode::kTooFewGenerators);
}

TEST(HypersurfaceTest, PhamBrieskorn) {
  const SaturationReport r235 = pi_set_hypersurface(*PBRing{{2, 3, 5}}.ring());
  EXPECT_TRUE(r235.pi_exact);
  EXPECT_EQ(r235.pi(), primes({2, 3, 5}));
  EXPECT_EQ(r235.saturated_codim1, std::optional<bool>(false));
  EXPECT_TRUE(r235.failing_pairs.empty());

  const SaturationReport r236 = pi_set_hypersurface(*PBRing{{2, 3, 6}}.ring());
  EXPECT_TRUE(r236.pi_exact);
  EXPECT_TRUE(r236.pi().empty());
  EXPECT_EQ(r236.saturated_codim1, std::optional<bool>(true));
}

TEST(HypersurfaceTest, FailedPairGivesInterval) {
  const SaturationReport r = pi_set_hypersurface(*cross_term_ring());
  EXPECT_FALSE(r.pi_exact);
  EXPECT_EQ(code_of([&] { r.pi(); }), ErrorCode::kPiNotExact);
  using Pair = std::pair<std::size_t, std::size_t>;
  EXPECT_EQ(r.failing_pairs, (std::vector<Pair>{{1, 3}, {2, 3}}));
  ASSERT_TRUE(r.pi_upper.has_value());
  EXPECT_TRUE(r.E.is_subset_of(r.pi_lower));
  EXPECT_TRUE(r.pi_lower.is_subset_of(*r.pi_upper));
  int failed = 0;
  for (const Hypothesis& h : r.hypotheses) {
    if (h.status == Hypothesis::Status::kFailed) ++failed;
  }
  EXPECT_EQ(failed, 2);
  EXPECT_EQ(code_of([&] { pi_star_contains(r, 3); }), ErrorCode::kPiNotExact);
}

TEST(HypersurfaceTest, IntervalBoundsWithWeights) {
  const RingPtr ring = ring_of(R"(ring
  var X1 weight=1
  var X2 weight=2
  var X3 weight=3
  relation lead=X2 : X2^2 - X1*X3
end
)");
  const SaturationReport r = pi_set_hypersurface(*ring);
  EXPECT_FALSE(r.pi_exact);
  ASSERT_TRUE(r.pi_upper.has_value());
  EXPECT_TRUE(r.pi_upper->is_subset_of(primes({2, 3})));
  EXPECT_TRUE(r.E.is_subset_of(*r.pi_upper));
}

TEST(HypersurfaceTest, Errors) {
  EXPECT_EQ(code_of([] {
              pi_set_hypersurface(*ring_of("ring\n var x\n var y\nend\n"));
            }),
            ErrorCode::kNoRelation);
  EXPECT_EQ(code_of([] {
              pi_set_hypersurface(*ring_of(R"(ring
  var X1 weight=2
  var X2 weight=2
  var X3 weight=2
  relation lead=X1 : X1^2 + X2^2 + X3^2
end
)"));
            }),
            ErrorCode::kNotSaturationIndexOne);
}

TEST(PBTest, CuratedTuples) {
  const SaturationReport a = pb_analyze({{2, 3, 5}});
  EXPECT_EQ(a.d_list, (std::vector<std::int64_t>{15, 10, 6}));
  EXPECT_EQ(a.pi(), primes({2, 3, 5}));
  EXPECT_EQ(a.saturated_codim1, std::optional<bool>(false));
  EXPECT_EQ(a.pointwise_saturated, std::optional<bool>(false));

  const SaturationReport b = pb_analyze({{2, 3, 6}});
  EXPECT_EQ(b.d_list, (std::vector<std::int64_t>{3, 2, 1}));
  EXPECT_TRUE(b.pi().empty());
  EXPECT_EQ(b.saturated_codim1, std::optional<bool>(true));
  EXPECT_EQ(b.pointwise_saturated, std::optional<bool>(true));

  const SaturationReport c = pb_analyze({{2, 2, 3}});
  EXPECT_EQ(c.d_list, (std::vector<std::int64_t>{3, 3, 2}));
  EXPECT_EQ(c.e_list, (std::vector<std::int64_t>{1, 1, 3}));
  EXPECT_EQ(c.pi(), primes({3}));
  EXPECT_EQ(c.saturated_codim1, std::optional<bool>(false));

  EXPECT_EQ(code_of([] { pb_analyze({{2, 3}}); }), ErrorCode::kTooFewExponents);
}

TEST(PBTest, Invariants) {
  std::mt19937_64 rng(testing::kSeed + 40);
  std::uniform_int_distribution<int> n(3, 5);
  std::uniform_int_distribution<int> a(1, 30);
  for (int trial = 0; trial < 100; ++trial) {
    PBRing pb;
    const int k = n(rng);
    for (int i = 0; i < k; ++i) pb.exponents.push_back(a(rng));
    const auto d = pb.degrees();
    EXPECT_EQ(gcd_of_set(std::span<const std::int64_t>(d)), 1);
    const SaturationReport r = pb_analyze(pb);
    ASSERT_TRUE(r.pi_exact);
    EXPECT_TRUE(r.E.is_subset_of(r.pi()));
    const bool all_one = std::all_of(r.e_list.begin(), r.e_list.end(),
                                     [](std::int64_t e) { return e == 1; });
    EXPECT_EQ(*r.saturated_codim1, all_one);
    EXPECT_EQ(*r.saturated_codim1, r.pi().empty());
    if (*r.pointwise_saturated) {
      EXPECT_TRUE(*r.saturated_codim1);
    }
  }
}

TEST(PBTest, RigidityNoteForLargeSaturated) {
  const SaturationReport r = pb_analyze({{2, 3, 6, 6}});
  ASSERT_TRUE(*r.saturated_codim1);
  bool noted = false;
  for (const Hypothesis& h : r.hypotheses) {
    noted = noted || h.name.find("rigid") != std::string::npos;
  }
  EXPECT_TRUE(noted);
}

TEST(PiStarTest, Membership) {
  const SaturationReport r = pb_analyze({{2, 3, 5}});
  EXPECT_TRUE(pi_star_contains(r, 7));
  EXPECT_FALSE(pi_star_contains(r, 10));
  const SaturationReport s = pb_analyze({{2, 3, 6}});
  for (int d = 1; d < 40; ++d) EXPECT_TRUE(pi_star_contains(s, d));
  for (int x = 1; x < 30; ++x) {
    for (int y = 1; y < 30; ++y) {
      if (pi_star_contains(r, x) && pi_star_contains(r, y)) {
        EXPECT_TRUE(pi_star_contains(r, x * y));
      }
    }
  }
}

TEST(RigidityHypothesesTest, Examples) {
  const HypothesisReport pb = check_rigidity_hypotheses(*PBRing{{2, 3, 5}}.ring());
  EXPECT_EQ(pb.hypotheses.front().status, Hypothesis::Status::kFailed);
  EXPECT_FALSE(pb.equivalence_applies);

  const RingPtr primes_ring = ring_of(R"(ring
  var x weight=2
  var y weight=3
  var z weight=5
  assert domain normal generators-prime generators-non-associate
end
)");
  const HypothesisReport ok = check_rigidity_hypotheses(*primes_ring);
  EXPECT_EQ(ok.hypotheses.front().status, Hypothesis::Status::kVerified);
  EXPECT_TRUE(ok.equivalence_applies);

  const RingPtr bare = ring_of("ring\n var x weight=2\n var y weight=3\n var z weight=5\nend\n");
  const HypothesisReport un = check_rigidity_hypotheses(*bare);
  EXPECT_EQ(un.hypotheses.front().status, Hypothesis::Status::kVerified);
  EXPECT_EQ(un.hypotheses[1].status, Hypothesis::Status::kUnknown);
  EXPECT_FALSE(un.equivalence_applies);
}

}  // namespace
}  // namespace gradedlnd
