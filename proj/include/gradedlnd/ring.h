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

#ifndef GRADEDLND_RING_H_
#define GRADEDLND_RING_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gradedlnd/arith.h"
#include "gradedlnd/polynomial.h"

namespace gradedlnd {

struct Variable {
  std::string name;
  std::int64_t weight = 1;
  bool inverted = false;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// User assertions about the ring that the library cannot verify.
enum class Assertion {
  kDomain,
  kNormal,
  kRelationIrreducible,
  kGeneratorsPrime,
  kGeneratorsNonAssociate,
};

std::string_view assertion_name(Assertion a);
std::optional<Assertion> parse_assertion(std::string_view name);

// Input form of a relation: a polynomial and its designated leading variable.
struct RelationSpec {
  Polynomial poly;
  std::size_t lead = 0;

  friend bool operator==(const RelationSpec&, const RelationSpec&) = default;
};

// A validated relation: lead_coefficient * x_lead^lead_degree + (lower terms),
// where the leading coefficient is a unit (scalar times a monomial in inverted
// variables). `tail` is what x_lead^lead_degree rewrites to.
struct Relation {
  Polynomial poly;
  std::size_t lead = 0;
  int lead_degree = 0;
  Polynomial tail;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A Z-graded (or Z/mZ-graded) Laurent polynomial ring over Q in weighted
/// variables, modulo a triangular family of relations each monic up to a
/// unit in its own leading variable. Rings are immutable and shared.
///
/// Normal form: every leading variable's exponent is reduced below its
/// relation's degree. With monic leading terms the relations form a Groebner
/// basis for the lexicographic order that puts leading variables first, so
/// the remainder is unique.
class Ring {
 public:
  static RingPtr make(std::vector<Variable> variables,
                      std::vector<RelationSpec> relations = {},
                      std::set<Assertion> assertions = {},
                      std::int64_t modulus = 0);

  std::size_t num_vars() const { return variables_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(std::size_t i) const { return variables_[i]; }
  std::optional<std::size_t> find_variable(std::string_view name) const;
  // Throws UnknownVariable.
  std::size_t variable_index(std::string_view name) const;
  std::vector<std::int64_t> weights() const;

  // Relations in reduction order.
  const std::vector<Relation>& relations() const { return relations_; }
  bool has_relations() const { return !relations_.empty(); }
  // Relations as given to make().
  const std::vector<RelationSpec>& relation_specs() const { return relation_specs_; }
  bool is_lead_variable(std::size_t var) const;

  // 0 for a Z-grading, otherwise the grading group is Z/modulus.
  std::int64_t modulus() const { return modulus_; }
  const std::set<Assertion>& assertions() const { return assertions_; }
  bool asserts(Assertion a) const { return assertions_.count(a) > 0; }

  std::int64_t degree(const Monomial& m) const;
  std::int64_t normalize_degree(std::int64_t deg) const;
  bool is_valid_monomial(const Monomial& m) const;

  Polynomial reduce(Polynomial p) const;

  /// Copy of this ring with the given variables inverted. Throws
  /// UnsupportedDenominator if one of them leads a relation.
  RingPtr localized(std::span<const std::size_t> vars) const;

  /// Copy of this ring with one more relation and the given grading modulus.
  RingPtr with_relation(const Polynomial& poly, std::size_t lead,
                        std::int64_t modulus) const;

 private:
  Ring() = default;

  std::vector<Variable> variables_;
  std::vector<Relation> relations_;
  std::vector<RelationSpec> relation_specs_;
  std::set<Assertion> assertions_;
  std::int64_t modulus_ = 0;
};

/// An element of a ring, always stored in normal form.
class RingElem {
 public:
  RingElem() = default;
  RingElem(RingPtr ring, Polynomial poly);

  static RingElem zero(const RingPtr& ring);
  static RingElem constant(const RingPtr& ring, const Rat& c);
  static RingElem variable(const RingPtr& ring, std::size_t var, int power = 1);
  static RingElem monomial(const RingPtr& ring, const Monomial& m,
                           const Rat& c = Rat(1));

  const RingPtr& ring() const { return ring_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  bool is_constant() const { return poly_.is_constant(); }
  bool is_term() const { return poly_.size() == 1; }

  // Degree of a nonzero homogeneous element; nullopt otherwise.
  std::optional<std::int64_t> degree() const;
  bool is_homogeneous() const { return degree().has_value(); }

  RingElem pow(unsigned n) const;

  RingElem& operator+=(const RingElem& other);
  RingElem& operator-=(const RingElem& other);
  RingElem& operator*=(const RingElem& other);
  RingElem& operator*=(const Rat& c);
  RingElem operator-() const;

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator*(RingElem a, const Rat& c) { return a *= c; }
  friend RingElem operator*(const Rat& c, RingElem a) { return a *= c; }
  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.poly_ == b.poly_;
  }

 private:
  RingPtr ring_;
  Polynomial poly_;
};

// Nonzero homogeneous components keyed by degree; they sum to `e`.
std::map<std::int64_t, RingElem> homogeneous_components(const RingElem& e);

/// Moves an element into a ring over the same variables (a localization or
/// a quotient). Throws InvalidArgument if a negative exponent is not allowed
/// in the target.
RingElem embed(const RingElem& e, const RingPtr& target);

/// Inverse of a unit, found by recognizing powers that are scalar multiples
/// of monomials in inverted variables, then by a bounded linear search over
/// cofactor monomials. nullopt means no inverse was found.
std::optional<RingElem> find_inverse(const RingElem& e);

// The algebra generators as monomials: each variable, and additionally the
// inverse of each inverted variable.
struct GeneratorSet {
  std::vector<Monomial> monomials;
  std::vector<std::int64_t> degrees;
};
GeneratorSet expanded_generators(const Ring& ring);
std::vector<int> to_expanded(const Ring& ring, const Monomial& m);
Monomial from_expanded(const Ring& ring, std::span<const int> k);

/// Monomial generators of the Veronese subring of a ring, built from the
/// Hilbert basis of the congruence monoid of the expanded generator degrees.
class VeroneseDescription {
 public:
  VeroneseDescription() = default;
  VeroneseDescription(RingPtr ring, std::int64_t d);

  const RingPtr& ring() const { return ring_; }
  std::int64_t d() const { return d_; }
  const std::vector<RingElem>& generators() const { return generators_; }
  const std::vector<Monomial>& generator_monomials() const { return monomials_; }
  // Basis vectors in expanded-generator coordinates.
  const std::vector<std::vector<int>>& exponent_vectors() const {
    return exponent_vectors_;
  }
  std::optional<std::size_t> find_generator(const Monomial& m) const;

  // Multiplicities n_k with m == prod generator_k^{n_k}, or nullopt if m is
  // not in the Veronese monoid.
  std::optional<std::vector<int>> decompose(const Monomial& m) const;

 private:
  RingPtr ring_;
  std::int64_t d_ = 1;
  std::vector<RingElem> generators_;
  std::vector<Monomial> monomials_;
  std::vector<std::vector<int>> exponent_vectors_;
};

VeroneseDescription veronese_generators(const RingPtr& ring, std::int64_t d);

/// numerator / base^power, an element of a homogeneous localization.
struct LocalFraction {
  RingElem numerator;
  RingElem base;
  int power = 0;
};

bool fractions_equal(const LocalFraction& a, const LocalFraction& b);

/// Generators of the degree-zero part of B_f for a monomial f of nonzero
/// degree: the Hilbert basis of { (k, m) : deg(monomial k) == m * deg f },
/// each vector read as (monomial k) / f^m. The generator 1 is dropped.
std::vector<LocalFraction> degree_zero_localization_generators(
    const RingPtr& ring, const RingElem& f);

}  // namespace gradedlnd

#endif  // GRADEDLND_RING_H_
