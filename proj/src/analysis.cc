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

#include <numeric>

#include "gradedlnd/error.h"
#include "gradedlnd/polynomial_io.h"

namespace gradedlnd {

std::string status_name(Hypothesis::Status s) {
  switch (s) {
    case Hypothesis::Status::kVerified: return "verified";
    case Hypothesis::Status::kAsserted: return "asserted";
    case Hypothesis::Status::kFailed: return "failed";
    case Hypothesis::Status::kUnknown: return "unknown";
  }
  return "";
}

const PrimeSet& SaturationReport::pi() const {
  if (!pi_exact) {
    throw Error(ErrorCode::kPiNotExact, "the report only bounds Pi");
  }
  return pi_lower;
}

std::vector<std::int64_t> e_invariants(std::span<const std::int64_t> degrees) {
  if (degrees.size() < 2) {
    throw Error(ErrorCode::kTooFewGenerators, "need at least two degrees");
  }
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::int64_t g = 0;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      if (j != i) g = std::gcd(g, degrees[j]);
    }
    out.push_back(g);
  }
  return out;
}

namespace {

Int product(std::span<const std::int64_t> xs) {
  Int p(1);
  for (std::int64_t x : xs) p *= Int(static_cast<long>(x));
  return p;
}

std::string describe_pi_star(const SaturationReport& r) {
  if (r.pi_exact) {
    if (r.pi_lower.empty()) return "all positive integers";
    return "positive integers not divisible by any prime in " + r.pi_lower.to_string();
  }
  if (!r.pi_upper) {
    return "contains 1; no prime in " + r.pi_lower.to_string() + " divides a member";
  }
  return "contains every positive integer avoiding " + r.pi_upper->to_string() +
         "; no prime in " + r.pi_lower.to_string() + " divides a member";
}

void settle_flags(SaturationReport& r, bool exact) {
  r.pi_exact = exact && r.pi_upper && *r.pi_upper == r.pi_lower;
  if (r.pi_upper && r.pi_upper->empty()) {
    r.saturated_codim1 = true;
  } else if (!r.pi_lower.empty()) {
    r.saturated_codim1 = false;
  } else {
    r.saturated_codim1.reset();
  }
  r.pi_star = describe_pi_star(r);
}

Hypothesis assertion_entry(const Ring& ring, Assertion a, std::string name) {
  Hypothesis h;
  h.name = std::move(name);
  if (ring.asserts(a)) {
    h.status = Hypothesis::Status::kAsserted;
    h.detail = "declared by the user";
  } else {
    h.status = Hypothesis::Status::kUnknown;
    h.detail = "not declared";
  }
  return h;
}

PrimeSet intersect(const PrimeSet& a, const PrimeSet& b) {
  std::vector<Int> out;
  for (const Int& p : a.primes()) {
    if (b.contains(p)) out.push_back(p);
  }
  return PrimeSet(std::move(out));
}

}  // namespace

SaturationReport pi_set_hypersurface(const Ring& ring) {
  if (!ring.has_relations()) {
    throw Error(ErrorCode::kNoRelation, "the ring has no relation");
  }
  if (ring.relations().size() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "the substitution test needs a single relation");
  }
  SaturationReport r;
  r.d_list = ring.weights();
  const std::size_t n = r.d_list.size();
  if (n < 2) throw Error(ErrorCode::kTooFewGenerators, "need at least two variables");
  r.e_B = std::abs(gcd_of_set(std::span<const std::int64_t>(r.d_list)));
  if (r.e_B != 1) {
    throw Error(ErrorCode::kNotSaturationIndexOne,
                "gcd of the degrees is " + std::to_string(r.e_B) + ", not 1");
  }
  r.hypotheses.push_back({"saturation index 1", Hypothesis::Status::kVerified,
                          "gcd of the degrees is 1"});
  r.e_list = e_invariants(r.d_list);

  std::vector<std::int64_t> non_unit_e;
  std::vector<std::int64_t> unit_degrees;
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.variable(i).inverted) {
      unit_degrees.push_back(r.d_list[i]);
    } else {
      non_unit_e.push_back(r.e_list[i]);
    }
  }
  r.E = prime_factors(product(non_unit_e));

  const Polynomial& f = ring.relations().front().poly;
  const auto names = variable_names(ring);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::string pair = "(" + names[i] + ", " + names[j] + ")";
      if (ring.variable(i).inverted || ring.variable(j).inverted) {
        r.hypotheses.push_back({"F not in " + pair, Hypothesis::Status::kVerified,
                                "the ideal contains a unit"});
        continue;
      }
      const std::size_t zeroed[] = {i, j};
      if (f.with_zeroed(zeroed).is_zero()) {
        r.failing_pairs.emplace_back(i + 1, j + 1);
        r.hypotheses.push_back({"F not in " + pair, Hypothesis::Status::kFailed,
                                "F vanishes when both are set to 0"});
      } else {
        r.hypotheses.push_back({"F not in " + pair, Hypothesis::Status::kVerified,
                                "F survives setting both to 0"});
      }
    }
  }
  r.hypotheses.push_back(assertion_entry(ring, Assertion::kDomain, "domain"));
  r.hypotheses.push_back(
      assertion_entry(ring, Assertion::kRelationIrreducible, "relation is prime"));

  r.pi_lower = r.E;
  if (r.failing_pairs.empty()) {
    r.pi_upper = r.E;
  } else {
    // The irrelevant ideal has height n - 1 when F has no constant term.
    if (n >= 3 && f.constant_term() == 0) {
      r.pi_upper = prime_factors(product(r.d_list));
      r.hypotheses.push_back({"irrelevant ideal has height > 1",
                              Hypothesis::Status::kVerified,
                              "n >= 3 and F lies in (X_1, ..., X_n)"});
    } else {
      r.hypotheses.push_back({"irrelevant ideal has height > 1",
                              Hypothesis::Status::kUnknown, "not established"});
    }
    if (!unit_degrees.empty()) {
      PrimeSet bound =
          prime_factors(Int(static_cast<long>(
              gcd_of_set(std::span<const std::int64_t>(unit_degrees)))));
      r.pi_upper = r.pi_upper ? intersect(*r.pi_upper, bound) : bound;
    }
  }
  settle_flags(r, r.failing_pairs.empty());
  return r;
}

std::vector<std::int64_t> PBRing::degrees() const {
  std::int64_t l = 1;
  for (std::int64_t a : exponents) l = std::lcm(l, a);
  std::vector<std::int64_t> d;
  for (std::int64_t a : exponents) d.push_back(l / a);
  return d;
}

RingPtr PBRing::ring() const {
  const auto d = degrees();
  const std::size_t n = exponents.size();
  std::vector<Variable> vars;
  Polynomial f(n);
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back({"X" + std::to_string(i + 1), d[i], false});
    f.add_term(unit_monomial(n, i, static_cast<int>(exponents[i])), Rat(1));
  }
  return Ring::make(std::move(vars), {{f, 0}},
                    {Assertion::kDomain, Assertion::kNormal,
                     Assertion::kRelationIrreducible});
}

SaturationReport pb_analyze(const PBRing& pb) {
  const auto& a = pb.exponents;
  const std::size_t n = a.size();
  if (n < 3) throw Error(ErrorCode::kTooFewExponents, "need at least three exponents");
  for (std::int64_t ai : a) {
    if (ai < 1) throw Error(ErrorCode::kInvalidArgument, "exponents must be positive");
  }
  SaturationReport r;
  r.d_list = pb.degrees();
  r.e_B = gcd_of_set(std::span<const std::int64_t>(r.d_list));
  r.e_list = e_invariants(r.d_list);
  r.E = prime_factors(product(r.e_list));
  r.pi_lower = r.E;
  r.pi_upper = r.E;
  settle_flags(r, true);

  std::int64_t l = 1;
  for (std::int64_t ai : a) l = std::lcm(l, ai);
  bool lcm_drop = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t rest = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) rest = std::lcm(rest, a[j]);
    }
    lcm_drop = lcm_drop && rest == l;
  }
  bool pairwise = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairwise = pairwise && std::lcm(a[i], a[j]) == l;
  }
  r.saturated_codim1 = lcm_drop;
  r.pointwise_saturated = pairwise;

  r.hypotheses.push_back({"degree gcd is 1",
                          r.e_B == 1 ? Hypothesis::Status::kVerified
                                     : Hypothesis::Status::kFailed,
                          "gcd(d) = " + std::to_string(r.e_B)});
  r.hypotheses.push_back({"normal", Hypothesis::Status::kAsserted,
                          "isolated hypersurface singularity"});
  r.hypotheses.push_back({"saturated iff Pi empty",
                          lcm_drop == r.E.empty() ? Hypothesis::Status::kVerified
                                                  : Hypothesis::Status::kFailed,
                          "lcm criterion against the e_i"});
  bool coprime = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      coprime = coprime && std::gcd(r.d_list[i], r.d_list[j]) == 1;
    }
  }
  r.hypotheses.push_back({"pointwise iff degrees pairwise coprime",
                          pairwise == coprime ? Hypothesis::Status::kVerified
                                              : Hypothesis::Status::kFailed,
                          "pairwise lcm criterion against gcd(d_i, d_j)"});
  if (n >= 4 && lcm_drop) {
    r.hypotheses.push_back(
        {"rigidity equivalence", Hypothesis::Status::kVerified,
         "B non-rigid iff B^(d) non-rigid for all d iff for some d"});
  }
  return r;
}

bool pi_star_contains(const SaturationReport& report, std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "d must be positive");
  return !report.pi().divides_any(Int(static_cast<long>(d)));
}

HypothesisReport check_rigidity_hypotheses(const Ring& ring) {
  HypothesisReport out;
  const auto d = ring.weights();
  Hypothesis coprime{"gcd of all but one degree is 1", Hypothesis::Status::kVerified, ""};
  if (d.size() < 2) {
    coprime.status = Hypothesis::Status::kFailed;
    coprime.detail = "need at least two generators";
  } else {
    const auto e = e_invariants(d);
    std::string bad;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 1) {
        bad += (bad.empty() ? "" : ", ") + std::string("e_") + std::to_string(i + 1) +
               " = " + std::to_string(e[i]);
      }
    }
    if (bad.empty()) {
      coprime.detail = "every e_i is 1";
    } else {
      coprime.status = Hypothesis::Status::kFailed;
      coprime.detail = bad;
    }
  }
  out.hypotheses.push_back(coprime);
  out.hypotheses.push_back(assertion_entry(
      ring, Assertion::kGeneratorsNonAssociate, "generators pairwise non-associate"));
  out.hypotheses.push_back(
      assertion_entry(ring, Assertion::kGeneratorsPrime, "generators prime"));
  out.hypotheses.push_back(assertion_entry(ring, Assertion::kNormal, "normal"));
  out.hypotheses.push_back(assertion_entry(ring, Assertion::kDomain, "domain"));
  out.equivalence_applies = true;
  for (const Hypothesis& h : out.hypotheses) {
    out.equivalence_applies = out.equivalence_applies &&
                              (h.status == Hypothesis::Status::kVerified ||
                               h.status == Hypothesis::Status::kAsserted);
  }
  return out;
}

}  // namespace gradedlnd
