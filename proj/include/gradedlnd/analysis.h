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

#ifndef GRADEDLND_ANALYSIS_H_
#define GRADEDLND_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gradedlnd/arith.h"
#include "gradedlnd/ring.h"

namespace gradedlnd {

struct Hypothesis {
  enum class Status { kVerified, kAsserted, kFailed, kUnknown };
  std::string name;
  Status status = Status::kUnknown;
  std::string detail;
};

std::string status_name(Hypothesis::Status s);

struct SaturationReport {
  std::int64_t e_B = 1;
  std::vector<std::int64_t> d_list;
  std::vector<std::int64_t> e_list;
  PrimeSet E;
  // Pi lies between pi_lower and pi_upper; no upper bound means every prime
  // is still possible.
  PrimeSet pi_lower;
  std::optional<PrimeSet> pi_upper;
  bool pi_exact = false;
  std::string pi_star;
  std::optional<bool> saturated_codim1;
  std::optional<bool> pointwise_saturated;
  // 1-based index pairs (i, j) with F in (X_i, X_j).
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
  std::vector<Hypothesis> hypotheses;

  /// The exact Pi. Throws PiNotExact for an interval report.
  const PrimeSet& pi() const;
};

/// e_i = gcd of all degrees except the i-th. Throws TooFewGenerators if n < 2.
std::vector<std::int64_t> e_invariants(std::span<const std::int64_t> degrees);

/// The prime set of a hypersurface ring from the pairwise substitution test,
/// or bounds on it when some pair fails.
SaturationReport pi_set_hypersurface(const Ring& ring);

/// The hypersurface X_1^a_1 + ... + X_n^a_n graded by d_i = lcm(a) / a_i.
struct PBRing {
  std::vector<std::int64_t> exponents;

  std::vector<std::int64_t> degrees() const;
  RingPtr ring() const;
};

SaturationReport pb_analyze(const PBRing& pb);

/// True iff no prime of the report's Pi divides d.
bool pi_star_contains(const SaturationReport& report, std::int64_t d);

struct HypothesisReport {
  std::vector<Hypothesis> hypotheses;
  // The rigidity equivalence between B and its Veronese subrings applies.
  bool equivalence_applies = false;
};

HypothesisReport check_rigidity_hypotheses(const Ring& ring);

}  // namespace gradedlnd

#endif  // GRADEDLND_ANALYSIS_H_
