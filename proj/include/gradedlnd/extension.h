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

#ifndef GRADEDLND_EXTENSION_H_
#define GRADEDLND_EXTENSION_H_

#include <cstdint>
#include <map>
#include <vector>

#include "gradedlnd/derivation.h"
#include "gradedlnd/ring.h"

namespace gradedlnd {

/// B = A[X_1..X_n] / (f_1..f_n), where the f_i are the relations of `ring`
/// led by the new variables and A is the ring on the remaining variables.
struct EtalePresentation {
  RingPtr base;
  RingPtr ring;
  // base variable k is ring variable base_vars[k].
  std::vector<std::size_t> base_vars;
  std::vector<std::size_t> new_vars;
  // relation_polys[i] is led by new_vars[i].
  std::vector<Polynomial> relation_polys;
  // det(d f_i / d X_j), not reduced.
  Polynomial jacobian_det;
};

/// Throws InvalidArgument unless each new variable leads exactly one relation
/// and no other relation involves a new variable.
EtalePresentation make_etale_presentation(const RingPtr& ring,
                                          const std::vector<std::size_t>& new_vars);

Polynomial base_to_ring(const EtalePresentation& pres, const Polynomial& p);

// Internal choices that must not affect the result.
struct LiftOptions {
  std::vector<std::size_t> order;  // permutation of 0..n-1; empty = identity
  bool shift_representatives = false;
};

/// The unique extension of delta to B. Throws JacobianNotUnit if no inverse of
/// the Jacobian determinant is found.
Derivation jacobian_lift(const EtalePresentation& pres, const Derivation& delta,
                         const LiftOptions& options = {});

/// Homogeneous elements of degree coprime to d: generators if any qualify,
/// otherwise one monomial found in the degree monoid. Throws
/// NotSaturationIndexOne when the degrees have a common factor.
std::vector<RingElem> chi_d_generators(const RingPtr& ring, std::int64_t d);

struct ChartLift {
  RingPtr chart;
  VeroneseDescription veronese;
  Derivation derivation;
  // Images of the generators used, with derived ones filled in.
  std::vector<RingElem> delta_images;
  // Every image of a variable of B is free of new denominators.
  bool integral_on_B = false;
};

/// Lifts delta, given on the Veronese generators of the chart B_x, to B_x.
/// Keys of `delta` are generator monomials. Throws NotCoprimeChart,
/// MissingDeltaImage or InconsistentDelta.
ChartLift veronese_chart_lift(const RingPtr& ring, std::int64_t d, const RingElem& x,
                              const std::map<Monomial, RingElem>& delta);

}  // namespace gradedlnd

#endif  // GRADEDLND_EXTENSION_H_
