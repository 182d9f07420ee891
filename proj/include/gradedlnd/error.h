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

#ifndef GRADEDLND_ERROR_H_
#define GRADEDLND_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradedlnd {

// Every failure the library reports carries one of these codes. The CLI
// prints the code name verbatim.
enum class ErrorCode {
  kEmptyInput,
  kInvalidModulus,
  kNoCoprimeExists,
  kZeroHasAllPrimes,
  kDegreeZeroDenominator,
  kZeroDerivation,
  kNotASlice,
  kNilpotencyUnverified,
  kTooFewGenerators,
  kNotSaturationIndexOne,
  kTooFewExponents,
  kPiNotExact,
  kJacobianNotUnit,
  kNotCoprimeChart,
  kDegreeZeroDehomogenization,
  kUnsupportedDenominator,
  kIntegralityBoundExceeded,
  kNotHomogeneous,
  kKernelInDegreeZero,
  kUnknownVariable,
  kInhomogeneousRelation,
  kInvalidRelation,
  kIncompatibleDerivation,
  kInconsistentDelta,
  kMissingDeltaImage,
  kNoRelation,
  kInvalidArgument,
  kSyntaxError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, int line, int column)
      : Error(code, message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace gradedlnd

#endif  // GRADEDLND_ERROR_H_
