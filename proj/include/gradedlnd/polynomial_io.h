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

#ifndef GRADEDLND_POLYNOMIAL_IO_H_
#define GRADEDLND_POLYNOMIAL_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "gradedlnd/polynomial.h"
#include "gradedlnd/ring.h"

namespace gradedlnd {

/// Text form of a polynomial, e.g. "3/2*x^2*y - u^-1". Terms appear in
/// descending lexicographic order of exponent vectors; parse(format(p)) == p.
std::string format_polynomial(const Polynomial& p,
                              const std::vector<std::string>& names);
std::string format_monomial(const Monomial& m,
                            const std::vector<std::string>& names);
std::string format(const RingElem& e);
std::vector<std::string> variable_names(const Ring& ring);

/// Parses sums of products of rationals, variables with integer exponents and
/// parenthesized subexpressions with nonnegative exponents. Positions in
/// ParseError are reported relative to (line, first_column).
Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            int line = 1, int first_column = 1);

/// Parses and normalizes; negative exponents need inverted variables.
RingElem parse_element(std::string_view text, const RingPtr& ring,
                       int line = 1, int first_column = 1);

}  // namespace gradedlnd

#endif  // GRADEDLND_POLYNOMIAL_IO_H_
