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

#ifndef GRADEDLND_DERIVATION_H_
#define GRADEDLND_DERIVATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedlnd/ring.h"

namespace gradedlnd {

constexpr int kDefaultBound = 64;

/// A Q-derivation of a ring, determined by the images of the variables.
/// The image of an inverted variable's inverse is forced by Leibniz.
class Derivation {
 public:
  Derivation() = default;
  /// Throws IncompatibleDerivation unless every relation maps to zero.
  Derivation(RingPtr ring, std::vector<RingElem> images);

  static Derivation zero(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<RingElem>& images() const { return images_; }
  const RingElem& image(std::size_t var) const { return images_[var]; }
  bool is_zero() const;

  RingElem apply(const RingElem& e) const;
  RingElem apply_monomial(const Monomial& m) const;
  RingElem iterate(const RingElem& e, int times) const;

  // Degree e with D(x_i) homogeneous of degree deg x_i + e for every i with
  // D(x_i) != 0; nullopt for zero or inhomogeneous derivations.
  std::optional<std::int64_t> degree() const;

  // a * D.
  Derivation scaled(const RingElem& a) const;

  friend bool operator==(const Derivation& a, const Derivation& b);
  friend Derivation operator+(const Derivation& a, const Derivation& b);

 private:
  struct Unchecked {};
  Derivation(RingPtr ring, std::vector<RingElem> images, Unchecked);

  RingPtr ring_;
  std::vector<RingElem> images_;
};

/// Sum over relations of the Leibniz expansion of D(F) in normal form.
/// Zero iff the images define a derivation of the quotient.
std::vector<RingElem> relation_defects(const RingPtr& ring,
                                       const std::vector<RingElem>& images);

bool kernel_membership(const Derivation& d, const RingElem& e);

/// "x -> y; y -> 0".
std::string format_derivation(const Derivation& d);

std::map<std::int64_t, Derivation> decompose_homogeneous(const Derivation& d);

/// The component of maximal degree. Throws ZeroDerivation for d == 0.
std::pair<std::int64_t, Derivation> top_homogeneous_part(const Derivation& d);

struct NilpotencyCertificate {
  enum class Verdict { kNilpotent, kNotNilpotent, kUnknown };
  Verdict verdict = Verdict::kUnknown;
  // Nilpotent: generator label -> least n with D^n(g) == 0. Inverted
  // variables contribute their inverse as "v^-1".
  std::map<std::string, int> orders;
  // NotNilpotent: D(witness) == eigenvalue * witness.
  std::optional<RingElem> witness;
  Rat eigenvalue;
  int bound = kDefaultBound;

  bool nilpotent() const { return verdict == Verdict::kNilpotent; }
};

std::string verdict_name(NilpotencyCertificate::Verdict v);

/// Iterates D on each generator at most `bound` times. `max_terms` caps the
/// size of iterates; exceeding it gives Unknown.
NilpotencyCertificate certify_lnd(const Derivation& d, int bound = kDefaultBound,
                                  std::size_t max_terms = 20000);

/// Coefficients a_0..a_k in ker D with e == sum a_i s^i. Throws NotASlice if
/// D(s) != 1 and NilpotencyUnverified unless cert is Nilpotent.
std::vector<RingElem> slice_decompose(const Derivation& d, const RingElem& s,
                                      const RingElem& e,
                                      const NilpotencyCertificate& cert);

/// pi(b) = sum_j (-1)^j s^j D^j(b) / j!, the projection onto ker D along s.
RingElem kernel_projection(const Derivation& d, const RingElem& s,
                           const RingElem& b, int bound = kDefaultBound);

/// A derivation of the Veronese subring B^(d), stored as images of its
/// monomial generators and extended by Leibniz over monoid decompositions.
class VeroneseDerivation {
 public:
  VeroneseDerivation() = default;
  /// Images must lie in B^(d). Throws InvalidArgument otherwise.
  VeroneseDerivation(VeroneseDescription veronese, std::vector<RingElem> images);

  /// The restriction of a derivation of B that preserves B^(d).
  static VeroneseDerivation restrict(const Derivation& d,
                                     const VeroneseDescription& veronese);

  const VeroneseDescription& veronese() const { return veronese_; }
  const std::vector<RingElem>& images() const { return images_; }

  /// Throws InvalidArgument if e is not in B^(d).
  RingElem apply(const RingElem& e) const;
  RingElem iterate(const RingElem& e, int times) const;
  bool is_zero() const;

 private:
  VeroneseDescription veronese_;
  std::vector<RingElem> images_;
};

bool in_veronese(const RingElem& e, std::int64_t d);

std::string format_veronese_derivation(const VeroneseDerivation& d);

/// Iterates on the Veronese generators; orders are keyed by generator text.
NilpotencyCertificate certify_lnd(const VeroneseDerivation& d,
                                  int bound = kDefaultBound,
                                  std::size_t max_terms = 20000);

}  // namespace gradedlnd

#endif  // GRADEDLND_DERIVATION_H_
