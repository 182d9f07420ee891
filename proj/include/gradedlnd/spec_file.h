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

#ifndef GRADEDLND_SPEC_FILE_H_
#define GRADEDLND_SPEC_FILE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradedlnd/polynomial.h"
#include "gradedlnd/ring.h"

namespace gradedlnd {

// numerator / denominator, the denominator a monomial term.
struct FractionSpec {
  Polynomial numerator;
  Polynomial denominator;
};

struct DerivationSpec {
  std::string name;
  // Indexed by variable; unset entries are not mentioned in the file.
  std::vector<std::optional<Polynomial>> images;
};

struct WitnessSpec {
  Polynomial f;
  FractionSpec t;
  std::vector<FractionSpec> r;
};

/// A parsed specification file: one ring block and optional derivation,
/// delta, witness, seeds and etale blocks.
struct SpecFile {
  RingPtr ring;
  std::vector<DerivationSpec> derivations;
  // Keys and images may use negative exponents on any variable.
  std::vector<std::pair<Polynomial, Polynomial>> delta;
  bool has_delta = false;
  std::optional<WitnessSpec> witness;
  std::vector<Polynomial> seeds;
  bool has_seeds = false;
  std::vector<std::size_t> etale_new;
};

/// Throws ParseError with the line and column of the offending token.
SpecFile parse_spec(std::string_view text);

/// Canonical text; parse_spec(print_spec(s)) reproduces s.
std::string print_spec(const SpecFile& spec);

bool operator==(const SpecFile& a, const SpecFile& b);

/// A ring over the same names with every variable inverted and no relations,
/// used to read Laurent expressions such as chart data.
RingPtr laurent_names_ring(const Ring& ring);

}  // namespace gradedlnd

#endif  // GRADEDLND_SPEC_FILE_H_
