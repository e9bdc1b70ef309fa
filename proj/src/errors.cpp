// Copyright 2026 The Blotto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blotto/errors.hpp"

namespace blotto {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewPlayers: return "TooFewPlayers";
    case ErrorCode::EmptyGame: return "EmptyGame";
    case ErrorCode::BudgetOutOfRange: return "BudgetOutOfRange";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::NonPositiveValueBoolean: return "NonPositiveValueBoolean";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BudgetViolation: return "BudgetViolation";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::UnbalancedPartition: return "UnbalancedPartition";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::ValueTooLarge: return "ValueTooLarge";
    case ErrorCode::WrongPlayerCount: return "WrongPlayerCount";
    case ErrorCode::DegenerateDraw: return "DegenerateDraw";
    case ErrorCode::NonIntegerMass: return "NonIntegerMass";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InfeasibleDeviation: return "InfeasibleDeviation";
    case ErrorCode::NoKnownEquilibrium: return "NoKnownEquilibrium";
    case ErrorCode::BadSpecFile: return "BadSpecFile";
  }
  return "UnknownError";
}

}  // namespace blotto
