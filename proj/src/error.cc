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

#include "gradedlnd/error.h"

namespace gradedlnd {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kNoCoprimeExists: return "NoCoprimeExists";
    case ErrorCode::kZeroHasAllPrimes: return "ZeroHasAllPrimes";
    case ErrorCode::kDegreeZeroDenominator: return "DegreeZeroDenominator";
    case ErrorCode::kZeroDerivation: return "ZeroDerivation";
    case ErrorCode::kNotASlice: return "NotASlice";
    case ErrorCode::kNilpotencyUnverified: return "NilpotencyUnverified";
    case ErrorCode::kTooFewGenerators: return "TooFewGenerators";
    case ErrorCode::kNotSaturationIndexOne: return "NotSaturationIndexOne";
    case ErrorCode::kTooFewExponents: return "TooFewExponents";
    case ErrorCode::kPiNotExact: return "PiNotExact";
    case ErrorCode::kJacobianNotUnit: return "JacobianNotUnit";
    case ErrorCode::kNotCoprimeChart: return "NotCoprimeChart";
    case ErrorCode::kDegreeZeroDehomogenization: return "DegreeZeroDehomogenization";
    case ErrorCode::kUnsupportedDenominator: return "UnsupportedDenominator";
    case ErrorCode::kIntegralityBoundExceeded: return "IntegralityBoundExceeded";
    case ErrorCode::kNotHomogeneous: return "NotHomogeneous";
    case ErrorCode::kKernelInDegreeZero: return "KernelInDegreeZero";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kInhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorCode::kInvalidRelation: return "InvalidRelation";
    case ErrorCode::kIncompatibleDerivation: return "IncompatibleDerivation";
    case ErrorCode::kInconsistentDelta: return "InconsistentDelta";
    case ErrorCode::kMissingDeltaImage: return "MissingDeltaImage";
    case ErrorCode::kNoRelation: return "NoRelation";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace gradedlnd
