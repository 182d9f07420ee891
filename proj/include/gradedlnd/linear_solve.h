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

#ifndef GRADEDLND_LINEAR_SOLVE_H_
#define GRADEDLND_LINEAR_SOLVE_H_

#include <optional>
#include <vector>

#include "gradedlnd/arith.h"

namespace gradedlnd {

// Solves a * x == b over Q by Gauss-Jordan elimination. Free unknowns are
// set to zero. Returns nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b);

}  // namespace gradedlnd

#endif  // GRADEDLND_LINEAR_SOLVE_H_
