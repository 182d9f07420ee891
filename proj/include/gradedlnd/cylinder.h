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

#ifndef GRADEDLND_CYLINDER_H_
#define GRADEDLND_CYLINDER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradedlnd/derivation.h"
#include "gradedlnd/ring.h"

namespace gradedlnd {

/// B_(f) = R[t]: f homogeneous of nonzero degree, t and the generators of R
/// degree-zero fractions whose denominators are monomials dividing a power
/// of f.
struct CylinderWitness {
  RingElem f;
  LocalFraction t;
  std::vector<LocalFraction> R_generators;
};

/// numerator / base^power rendered as "n / b".
std::string format_fraction(const LocalFraction& q);

/// S = B/(h - 1), graded by Z/|deg h|.
struct Dehomogenization {
  RingPtr source;
  RingElem h;
  std::int64_t m = 0;
  RingPtr quotient;
  // Variable whose relation h - 1 defines S.
  std::size_t lead = 0;

  RingElem rho(const RingElem& e) const;
  /// Inverse of B_(h) -> S_0 on an element of residue class 0, written over
  /// a power of h. Throws InvalidArgument for other classes.
  LocalFraction rho_prime_inverse(const RingElem& y) const;
  RingElem rho_prime(const LocalFraction& q) const;
};

/// Throws DegreeZeroDehomogenization for deg h == 0 and UnsupportedDenominator
/// when h - 1 is not monic up to a unit in some variable.
Dehomogenization dehomogenize(const RingPtr& ring, const RingElem& h);

struct CylinderLnd {
  VeroneseDerivation derivation;
  int n = 0;
  int m = 0;
  // t * f^m lies in B^(d) and maps to f^(m + n).
  RingElem preimage;
  RingElem image;
  // Outcome of the heuristic checks that t does not lie in R.
  std::vector<std::string> witness_checks;
};

/// f^n times the derivation d/dt of B_(f)[f, 1/f] restricted to B^(|d|), with
/// the least n >= 0. Throws IntegralityBoundExceeded when no n <= bound works
/// or the witness does not describe the Veronese generators.
CylinderLnd cylinder_to_lnd(const RingPtr& ring, const CylinderWitness& w,
                            std::int64_t d, int bound = kDefaultBound);

/// A derivation of B from one of B^(1).
Derivation to_derivation(const VeroneseDerivation& d);

struct CylinderCandidate {
  enum class Verdict { kCertified, kUnverified, kFailed };
  Verdict verdict = Verdict::kFailed;
  std::optional<RingElem> h;
  std::optional<RingElem> beta;  // D(beta) == h
  std::string route;
  std::optional<CylinderWitness> witness;
  std::vector<std::string> diagnostics;
};

std::string verdict_name(CylinderCandidate::Verdict v);

struct CandidateOptions {
  // Total-degree bound on the monomials searched; 0 picks the default.
  int degree_bound = 0;
  int max_candidates = 24;
  int bound = kDefaultBound;
};

/// Searches D(B) cap ker D for a homogeneous h of nonzero degree and tries to
/// show B_(h) is a polynomial ring in one variable by exhibiting a slice.
/// Throws NotHomogeneous, NilpotencyUnverified or KernelInDegreeZero.
CylinderCandidate lnd_to_cylindrical_candidate(const Derivation& d,
                                               const NilpotencyCertificate& cert,
                                               const std::vector<RingElem>& kernel_seeds,
                                               const CandidateOptions& options = {});

}  // namespace gradedlnd

#endif  // GRADEDLND_CYLINDER_H_
