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


#ifndef GRADEDLND_TESTS_TEST_UTIL_H_
#define GRADEDLND_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gradedlnd/derivation.h"
#include "gradedlnd/polynomial_io.h"
#include "gradedlnd/ring.h"
#include "gradedlnd/spec_file.h"

namespace gradedlnd::testing {

inline constexpr std::uint64_t kSeed = 20261015;

inline RingPtr ring_of(std::string_view ring_block) {
  return parse_spec(std::string(ring_block)).ring;
}

// Ring without relations over the given names and weights.
inline RingPtr free_ring(const std::vector<std::string>& names,
                         const std::vector<std::int64_t>& weights,
                         const std::vector<bool>& inverted = {}) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < names.size(); ++i) {
    vars.push_back({names[i], weights[i], !inverted.empty() && inverted[i]});
  }
  return Ring::make(std::move(vars));
}

inline RingElem el(const RingPtr& ring, std::string_view text) {
  return parse_element(text, ring);
}

inline Derivation derivation_of(const RingPtr& ring,
                                const std::vector<std::string>& images) {
  std::vector<RingElem> out;
  for (const std::string& s : images) out.push_back(el(ring, s));
  return Derivation(ring, std::move(out));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Random polynomial with at most `terms` terms, small integer coefficients and
// monomials of total degree <= max_degree in the listed variables.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars,
                                    const std::vector<std::size_t>& vars,
                                    int max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars, 0);
    const int total = deg(rng);
    for (int k = 0; k < total; ++k) ++m[vars[pick(rng)]];
    const int c = coeff(rng);
    if (c != 0) p.add_term(m, Rat(c));
  }
  return p;
}

}  // namespace gradedlnd::testing

#endif  // GRADEDLND_TESTS_TEST_UTIL_H_
